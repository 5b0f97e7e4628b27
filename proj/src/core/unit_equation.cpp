#include <algorithm>
#include <vector>

#include "urset/errors.hpp"
#include "urset/parallel.hpp"
#include "urset/qsarith.hpp"

namespace urset::qs {

namespace {

constexpr std::size_t kMaxCandidates = std::size_t{1} << 28;

}  // namespace

std::vector<UnitPair> unit_equation_solutions(const SContext& S, unsigned bound, unsigned workers) {
  const auto& primes = S.primes();
  const std::size_t span = 2 * std::size_t{bound} + 1;
  std::size_t per_sign = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (per_sign > kMaxCandidates / span) throw BudgetError("unit equation search space too large");
    per_sign *= span;
  }
  const std::size_t total = 2 * per_sign;

  // Index layout: sign bit, then one base-(2E+1) digit per prime.
  std::vector<std::vector<UnitPair>> found(std::max(1U, workers));
  parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto& local = found[chunk];
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t code = idx / 2;
      Integer num = 1, den = 1, pe;
      for (const auto& p : primes) {
        const long e = static_cast<long>(code % span) - static_cast<long>(bound);
        code /= span;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        (e < 0 ? den : num) *= pe;
      }
      if (idx % 2 == 1) num = -num;
      Rational u(num, den);
      Rational v = Rational(1) - u;
      if (is_s_unit(S, v)) local.push_back({std::move(u), std::move(v)});
    }
  });

  std::vector<UnitPair> out;
  for (auto& chunk : found) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end(), [](const UnitPair& a, const UnitPair& b) { return canonical_less(a.u, b.u); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace urset::qs
