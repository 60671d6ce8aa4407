#include "critmin/monodromy.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "critmin/patterson.hpp"

namespace critmin {

namespace {

// Above this degree the tuple space outgrows any reasonable budget and the
// search switches to seeded random sampling.
constexpr long long kExhaustiveDegreeLimit = 6;

// (0 1 ... m-1), all other letters fixed.
Permutation canonical_cycle(long long degree, long long order) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  for (long long i = 0; i + 1 < order; ++i)
    images[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
  images[static_cast<std::size_t>(order - 1)] = 0;
  return Permutation(std::move(images));
}

std::vector<Permutation> symmetric_group(long long degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> all;
  do {
    all.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

std::vector<Permutation> cycle_type_class(long long degree, long long order) {
  std::vector<Permutation> result;
  for (Permutation& p : symmetric_group(degree))
    if (p.single_cycle_order() == order) result.push_back(std::move(p));
  return result;
}

Permutation random_permutation(std::mt19937_64& rng, long long degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  // Hand-rolled Fisher-Yates: std::shuffle's draw pattern is not pinned by
  // the standard and seed determinism is part of the contract.
  for (std::size_t i = images.size(); i > 1; --i)
    std::swap(images[i - 1], images[rng() % i]);
  return Permutation(std::move(images));
}

struct Search {
  long long degree;
  long long genus;
  std::vector<long long> types;  // profile multiplicities, non-increasing
  const RamificationProfile* profile;
  std::uint64_t evaluations = 0;
  std::uint64_t max_evaluations = 0;

  bool exhausted() const { return evaluations >= max_evaluations; }

  // Candidate = handle pairs plus the first k-1 branch entries; the final
  // branch entry is forced by the product relation and type-checked here.
  std::optional<MonodromyCertificate> evaluate(
      const std::vector<std::pair<Permutation, Permutation>>& handles,
      const std::vector<Permutation>& branch_prefix) {
    ++evaluations;
    Permutation product = Permutation::identity(
        static_cast<std::size_t>(degree));
    for (const auto& [a, b] : handles) product = product * commutator(a, b);
    for (const Permutation& s : branch_prefix) product = product * s;

    std::vector<Permutation> branch = branch_prefix;
    if (types.empty()) {
      if (!product.is_identity()) return std::nullopt;
    } else {
      Permutation last = product.inverse();
      if (last.single_cycle_order() != types.back()) return std::nullopt;
      branch.push_back(std::move(last));
    }

    std::vector<Permutation> generators;
    generators.reserve(handles.size() * 2 + branch.size());
    for (const auto& [a, b] : handles) {
      generators.push_back(a);
      generators.push_back(b);
    }
    for (const Permutation& s : branch) generators.push_back(s);
    if (!transitive(generators, static_cast<std::size_t>(degree)))
      return std::nullopt;

    return MonodromyCertificate{degree, genus, handles, branch, *profile};
  }
};

// Free slots, in enumeration order: the 2g handle entries over all of S_d,
// then branch entries s_2 .. s_{k-1} over their cycle-type classes. s_1 is
// pinned to the canonical representative of its class (any certificate can
// be conjugated into this form), and s_k is computed, so k == 1 leaves the
// single branch entry fully determined by the handles.
RealizeResult exhaustive_search(Search& ctx) {
  const long long k = static_cast<long long>(ctx.types.size());
  const std::vector<Permutation> all = symmetric_group(ctx.degree);

  std::vector<const std::vector<Permutation>*> slots;
  std::vector<std::vector<Permutation>> class_lists;
  for (long long i = 0; i < 2 * ctx.genus; ++i) slots.push_back(&all);
  for (long long j = 1; j + 1 < k; ++j)
    class_lists.push_back(cycle_type_class(ctx.degree, ctx.types[j]));
  for (const auto& list : class_lists) slots.push_back(&list);
  for (const auto* list : slots)
    if (list->empty()) return RealizeResult::not_found();

  std::vector<Permutation> fixed_prefix;
  if (k >= 2) fixed_prefix.push_back(canonical_cycle(ctx.degree, ctx.types[0]));

  std::vector<std::size_t> index(slots.size(), 0);
  std::vector<std::pair<Permutation, Permutation>> handles(
      static_cast<std::size_t>(ctx.genus),
      {Permutation::identity(static_cast<std::size_t>(ctx.degree)),
       Permutation::identity(static_cast<std::size_t>(ctx.degree))});
  while (true) {
    if (ctx.exhausted()) return RealizeResult::not_found();

    for (long long i = 0; i < ctx.genus; ++i) {
      handles[static_cast<std::size_t>(i)] = {
          (*slots[static_cast<std::size_t>(2 * i)])[index[static_cast<std::size_t>(2 * i)]],
          (*slots[static_cast<std::size_t>(2 * i + 1)])[index[static_cast<std::size_t>(2 * i + 1)]]};
    }
    std::vector<Permutation> prefix = fixed_prefix;
    for (std::size_t j = static_cast<std::size_t>(2 * ctx.genus);
         j < slots.size(); ++j)
      prefix.push_back((*slots[j])[index[j]]);

    if (auto cert = ctx.evaluate(handles, prefix))
      return RealizeResult::found(std::move(*cert));

    // odometer step, last slot fastest
    std::size_t pos = slots.size();
    while (pos > 0) {
      --pos;
      if (++index[pos] < slots[pos]->size()) break;
      index[pos] = 0;
      if (pos == 0) return RealizeResult::not_found();
    }
    if (slots.empty()) return RealizeResult::not_found();
  }
}

RealizeResult randomized_search(Search& ctx, std::uint64_t seed) {
  const long long d = ctx.degree;
  const long long k = static_cast<long long>(ctx.types.size());
  std::mt19937_64 rng(seed);

  const bool random_handles = ctx.genus >= 1;
  const bool random_branch = k >= 3;
  std::vector<std::pair<Permutation, Permutation>> handles(
      static_cast<std::size_t>(ctx.genus),
      {Permutation::identity(static_cast<std::size_t>(d)),
       Permutation::identity(static_cast<std::size_t>(d))});

  // Cheap deterministic candidates first: the full-cycle constructions that
  // settle unramified covers, one full-order point over the torus, and
  // homogeneous full-cycle branching over the sphere.
  {
    const Permutation sigma = canonical_cycle(d, d);
    if (ctx.genus >= 1 && k == 0) {
      handles[0] = {sigma, Permutation::identity(static_cast<std::size_t>(d))};
      if (auto cert = ctx.evaluate(handles, {}))
        return RealizeResult::found(std::move(*cert));
    }
    if (ctx.genus >= 1 && k == 1) {
      std::vector<int> flip(static_cast<std::size_t>(d));
      for (long long i = 0; i < d; ++i)
        flip[static_cast<std::size_t>(i)] =
            static_cast<int>((d - i) % d);
      handles[0] = {sigma, Permutation(std::move(flip))};
      if (auto cert = ctx.evaluate(handles, {}))
        return RealizeResult::found(std::move(*cert));
      handles[0] = {Permutation::identity(static_cast<std::size_t>(d)),
                    Permutation::identity(static_cast<std::size_t>(d))};
    }
    if (ctx.genus == 0 && k >= 2 &&
        std::all_of(ctx.types.begin(), ctx.types.end(),
                    [d](long long m) { return m == d; })) {
      std::vector<Permutation> prefix(static_cast<std::size_t>(k - 1), sigma);
      if (auto cert = ctx.evaluate(handles, prefix))
        return RealizeResult::found(std::move(*cert));
    }
  }

  // Without any random slot the candidate is unique, so one evaluation
  // decides.
  if (!random_handles && !random_branch) {
    std::vector<Permutation> prefix;
    if (k >= 2) prefix.push_back(canonical_cycle(d, ctx.types[0]));
    if (!ctx.exhausted())
      if (auto cert = ctx.evaluate(handles, prefix))
        return RealizeResult::found(std::move(*cert));
    return RealizeResult::not_found();
  }

  while (!ctx.exhausted()) {
    for (long long i = 0; i < ctx.genus; ++i)
      handles[static_cast<std::size_t>(i)] = {random_permutation(rng, d),
                                              random_permutation(rng, d)};
    std::vector<Permutation> prefix;
    if (k >= 2) {
      prefix.push_back(canonical_cycle(d, ctx.types[0]));
      for (long long j = 1; j + 1 < k; ++j)
        prefix.push_back(conjugate(canonical_cycle(d, ctx.types[j]),
                                   random_permutation(rng, d)));
    }
    if (auto cert = ctx.evaluate(handles, prefix))
      return RealizeResult::found(std::move(*cert));
  }
  return RealizeResult::not_found();
}

}  // namespace

const char* to_string(Violation v) noexcept {
  switch (v) {
    case Violation::handle_count_mismatch: return "handle_count_mismatch";
    case Violation::product_not_identity: return "product_not_identity";
    case Violation::not_transitive: return "not_transitive";
    case Violation::profile_mismatch: return "profile_mismatch";
  }
  return "unknown";
}

const char* to_string(InfeasibleReason r) noexcept {
  switch (r) {
    case InfeasibleReason::degree_too_small: return "degree_too_small";
    case InfeasibleReason::parity_violation: return "parity_violation";
    case InfeasibleReason::sphere_euler_bound: return "sphere_euler_bound";
  }
  return "unknown";
}

RealizeResult RealizeResult::found(MonodromyCertificate cert) {
  RealizeResult r;
  r.kind_ = Kind::certificate;
  r.certificate_ = std::move(cert);
  return r;
}

RealizeResult RealizeResult::infeasible(InfeasibleReason reason) {
  RealizeResult r;
  r.kind_ = Kind::infeasible;
  r.reason_ = reason;
  return r;
}

RealizeResult RealizeResult::not_found() { return RealizeResult(); }

const MonodromyCertificate& RealizeResult::certificate() const {
  if (kind_ != Kind::certificate)
    raise(errc::invalid_argument, "no certificate in this result");
  return *certificate_;
}

InfeasibleReason RealizeResult::reason() const {
  if (kind_ != Kind::infeasible)
    raise(errc::invalid_argument, "no infeasibility reason in this result");
  return *reason_;
}

VerificationReport verify_certificate(const MonodromyCertificate& cert) {
  if (cert.degree < 1)
    raise(errc::invalid_argument, "certificate degree must be positive");
  if (cert.target_genus < 0)
    raise(errc::invalid_argument, "certificate target genus must be >= 0");

  const std::size_t d = static_cast<std::size_t>(cert.degree);
  auto check_entry = [d](const Permutation& p) {
    if (p.degree() != d)
      raise(errc::malformed_permutation,
            "permutation degree differs from the certificate degree");
  };
  for (const auto& [a, b] : cert.handles) {
    check_entry(a);
    check_entry(b);
  }
  for (const Permutation& s : cert.branch) check_entry(s);

  VerificationReport report;

  if (static_cast<long long>(cert.handles.size()) != cert.target_genus)
    report.violations.push_back(Violation::handle_count_mismatch);

  Permutation product = Permutation::identity(d);
  for (const auto& [a, b] : cert.handles) product = product * commutator(a, b);
  for (const Permutation& s : cert.branch) product = product * s;
  if (!product.is_identity())
    report.violations.push_back(Violation::product_not_identity);

  std::vector<Permutation> generators;
  generators.reserve(cert.handles.size() * 2 + cert.branch.size());
  for (const auto& [a, b] : cert.handles) {
    generators.push_back(a);
    generators.push_back(b);
  }
  for (const Permutation& s : cert.branch) generators.push_back(s);
  if (!transitive(generators, d))
    report.violations.push_back(Violation::not_transitive);

  std::vector<long long> orders;
  bool orders_clean = true;
  long long defect_total = 0;  // sum of (d - c_j)
  for (const Permutation& s : cert.branch) {
    defect_total += cert.degree - static_cast<long long>(s.cycle_count());
    long long order = s.single_cycle_order();
    if (order == 0)
      orders_clean = false;  // identity entry or several nontrivial cycles
    else
      orders.push_back(order);
  }
  std::sort(orders.begin(), orders.end(), std::greater<long long>());
  if (!orders_clean ||
      orders != cert.declared_profile.multiplicities())
    report.violations.push_back(Violation::profile_mismatch);

  report.computed_source_euler =
      cert.degree * (2 - 2 * cert.target_genus) - defect_total;
  report.valid = report.violations.empty();
  return report;
}

RealizeResult realize(const Surface& target, long long degree,
                      const RamificationProfile& profile,
                      const SearchBudget& budget) {
  if (degree < 1)
    raise(errc::invalid_argument, "degree must be positive");

  if (profile.max_multiplicity() > degree)
    return RealizeResult::infeasible(InfeasibleReason::degree_too_small);
  if (target.genus() >= 1 && profile.branching_total() % 2 != 0)
    return RealizeResult::infeasible(InfeasibleReason::parity_violation);
  if (target.genus() == 0 && profile.size() <= 2 &&
      hurwitz_euler(2, degree, profile) <= 0)
    return RealizeResult::infeasible(InfeasibleReason::sphere_euler_bound);

  Search ctx;
  ctx.degree = degree;
  ctx.genus = target.genus();
  ctx.types = profile.multiplicities();
  ctx.profile = &profile;
  ctx.max_evaluations = budget.max_evaluations;

  if (degree <= kExhaustiveDegreeLimit) return exhaustive_search(ctx);
  return randomized_search(ctx, budget.seed);
}

std::optional<long long> oracle_phi(const Surface& source,
                                    const Surface& target, long long k_max,
                                    long long d_max,
                                    const SearchBudget& budget) {
  if (k_max < 0 || d_max < 0)
    raise(errc::invalid_argument, "search bounds must be non-negative");
  if (d_max < 1) return std::nullopt;

  const long long chi_src = source.euler_char();
  for (long long k = 0; k <= k_max; ++k) {
    for (const EnumeratedCovering& item :
         enumerate_covering_data(chi_src, target, k, d_max)) {
      if (item.realizability == Realizability::patterson_guaranteed) {
        if (patterson_feasible(target, item.data.degree(),
                               item.data.profile()))
          return k;
      } else {
        RealizeResult attempt =
            realize(target, item.data.degree(), item.data.profile(), budget);
        if (attempt.kind() == RealizeResult::Kind::certificate) return k;
      }
    }
  }
  return std::nullopt;
}

}  // namespace critmin
