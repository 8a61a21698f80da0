#include "core/oracle.hpp"

#include <gmpxx.h>

#include "core/errors.hpp"

namespace tverberg {

namespace {

constexpr long kEnumerationGuard = 10000000;

mpz_class count_proper_partitions_z(int d, int r, int n) {
  const int cap = d + 1;
  // f[b][k]: partitions of k labeled points into b labeled blocks of
  // size 1..cap each.
  std::vector<std::vector<mpz_class>> f(
      static_cast<std::size_t>(r) + 1,
      std::vector<mpz_class>(static_cast<std::size_t>(n) + 1, 0));
  f[0][0] = 1;
  mpz_class binom;
  for (int b = 1; b <= r; ++b)
    for (int k = b; k <= n; ++k) {
      mpz_class acc = 0;
      for (int s = 1; s <= cap && s <= k; ++s) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                     static_cast<unsigned long>(s));
        acc += binom * f[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(k - s)];
      }
      f[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] = acc;
    }
  // Unordered: disjoint non-empty blocks are pairwise distinct, so every
  // unordered partition is counted exactly r! times above.
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(r));
  mpz_class labeled = f[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
  return labeled / fact;
}

struct Enumerator {
  const Instance& inst;
  bool strict;
  int n, r, cap;
  std::vector<int> assign;
  std::vector<int> block_size;
  OracleReport report;

  Enumerator(const Instance& instance, bool strict_mode)
      : inst(instance), strict(strict_mode), n(instance.size()),
        r(instance.parts()), cap(instance.dim() + 1),
        assign(static_cast<std::size_t>(n), -1),
        block_size(static_cast<std::size_t>(r), 0) {
    report.strict = strict_mode;
  }

  void emit() {
    ++report.total_proper_partitions;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(r));
    for (int i = 0; i < n; ++i)
      blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i);
    Partition part(std::move(blocks), n);
    try {
      Certificate cert = solve_partition(inst, part);
      for (const Rat& a : cert.alpha)
        if (strict ? a.sign() <= 0 : a.sign() < 0) return;
      VerifyResult vr = verify_certificate(inst, part, cert, strict);
      if (!vr.ok)
        throw InternalError("oracle: exact solve failed its own re-check: " + vr.reason);
      report.valid_partitions.push_back({std::move(part), std::move(cert)});
    } catch (const SingularSystemError&) {
      ++report.singular_partitions;
    }
  }

  // Restricted-growth assignment: point i may join any non-full open block
  // or open the next one, so each unordered partition appears exactly once,
  // with blocks ordered by smallest element.
  void step(int i, int used) {
    if (i == n) {
      if (used == r) emit();
      return;
    }
    if (used + (n - i) < r) return; // cannot open enough blocks anymore
    for (int b = 0; b < used; ++b) {
      if (block_size[static_cast<std::size_t>(b)] == cap) continue;
      assign[static_cast<std::size_t>(i)] = b;
      ++block_size[static_cast<std::size_t>(b)];
      step(i + 1, used);
      --block_size[static_cast<std::size_t>(b)];
    }
    if (used < r) {
      assign[static_cast<std::size_t>(i)] = used;
      block_size[static_cast<std::size_t>(used)] = 1;
      step(i + 1, used + 1);
      block_size[static_cast<std::size_t>(used)] = 0;
    }
    assign[static_cast<std::size_t>(i)] = -1;
  }
};

} // namespace

Rat count_proper_partitions(int d, int r, int n) {
  if (d < 1 || r < 2 || n < r) throw ContractError("count_proper_partitions: bad shape");
  return Rat(count_proper_partitions_z(d, r, n));
}

OracleReport enumerate_tverberg(const Instance& inst, bool strict) {
  mpz_class count = count_proper_partitions_z(inst.dim(), inst.parts(), inst.size());
  if (count > kEnumerationGuard)
    throw SizeError("enumerate_tverberg: " + count.get_str() +
                    " proper partitions exceed the enumeration guard of 10^7");
  Enumerator e(inst, strict);
  e.step(0, 0);
  if (e.report.total_proper_partitions != count.get_si())
    throw InternalError("enumerate_tverberg: enumeration disagrees with the count formula");
  return e.report;
}

bool contains_partition(const OracleReport& report, const Partition& part) {
  std::vector<std::vector<int>> canon = part.canonical_blocks();
  for (const OracleEntry& entry : report.valid_partitions)
    if (entry.partition.canonical_blocks() == canon) return true;
  return false;
}

} // namespace tverberg
