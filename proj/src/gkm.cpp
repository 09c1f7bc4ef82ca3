#include "kflag/gkm.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "kflag/errors.hpp"

namespace kflag {

namespace {

std::size_t as_index(int i) { return static_cast<std::size_t>(i); }

GrothendieckCache& pick(GrothendieckCache* cache) { return cache ? *cache : shared_cache(); }

} // namespace

LaurentPoly restrict_at(const LaurentPoly& f, const Permutation& z) {
    const int n = f.rank();
    if (z.rank() != n) throw InvalidInput("restrict: rank mismatch");
    Assignment a;
    for (int i = 1; i <= n; ++i) a.emplace(Variable{Block::X, i}, LaurentPoly::y(n, z(i)));
    return substitute(f, a);
}

bool restricts_to_zero(const LaurentPoly& f, const Permutation& z) {
    const int n = f.rank();
    if (z.rank() != n) throw InvalidInput("restrict: rank mismatch");
    if (f.is_zero()) return true;
    // y-exponents after x_i -> y_{z(i)}, then y_n eliminated.
    std::unordered_map<Exponents, Coefficient, ExponentsHash> acc;
    acc.reserve(f.size());
    Exponents y(as_index(n)), key(as_index(n - 1));
    for (const auto& t : f.terms()) {
        for (int k = 0; k < n; ++k) y[as_index(k)] = t.exps[as_index(n + k)];
        for (int i = 1; i <= n; ++i) y[as_index(z(i) - 1)] += t.exps[as_index(i - 1)];
        for (int j = 0; j + 1 < n; ++j) key[as_index(j)] = y[as_index(j)] - y[as_index(n - 1)];
        acc[key] += t.coeff;
    }
    return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

std::size_t lex_rank(const Permutation& z) {
    const int n = z.rank();
    std::size_t rank = 0;
    for (int i = 1; i <= n; ++i) {
        std::size_t smaller = 0;
        for (int j = i + 1; j <= n; ++j)
            if (z(j) < z(i)) ++smaller;
        rank = rank * static_cast<std::size_t>(n - i + 1) + smaller;
    }
    return rank;
}

RestrictionClass::RestrictionClass(int n, std::vector<LaurentPoly> entries)
    : n_(n), points_(enumerate(n)), entries_(std::move(entries)) {
    if (entries_.size() != points_.size())
        throw InvalidInput("restriction class for n=" + std::to_string(n) + " needs " +
                           std::to_string(points_.size()) + " entries, got " + std::to_string(entries_.size()));
    for (const auto& e : entries_) {
        if (e.rank() != n) throw InvalidInput("restriction class entry has wrong rank");
        if (!e.is_x_free()) throw InvalidInput("restriction class entry involves x variables: " + e.to_string());
    }
}

RestrictionClass RestrictionClass::zero(int n) {
    const auto count = enumerate(n).size();
    return RestrictionClass(n, std::vector<LaurentPoly>(count, LaurentPoly(n)));
}

const LaurentPoly& RestrictionClass::at(const Permutation& z) const {
    if (z.rank() != n_) throw InvalidInput("restriction class lookup: rank mismatch");
    return entries_[lex_rank(z)];
}

RestrictionClass& RestrictionClass::operator+=(const RestrictionClass& other) {
    if (other.n_ != n_) throw InvalidInput("restriction class sum: rank mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

RestrictionClass RestrictionClass::scaled(const LaurentPoly& c) const {
    if (!c.is_x_free()) throw InvalidInput("restriction class scalar must be x-free");
    RestrictionClass out(*this);
    for (auto& e : out.entries_) e *= c;
    return out;
}

bool RestrictionClass::equivalent(const RestrictionClass& other) const {
    if (other.n_ != n_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!canonical_zero_test(entries_[i] - other.entries_[i])) return false;
    return true;
}

RestrictionClass restrict_all(const LaurentPoly& f) {
    std::vector<LaurentPoly> entries;
    for (const auto& z : enumerate(f.rank())) entries.push_back(restrict_at(f, z));
    return RestrictionClass(f.rank(), std::move(entries));
}

SupportSet support(const LaurentPoly& f) {
    SupportSet out;
    for (const auto& z : enumerate(f.rank()))
        if (!restricts_to_zero(f, z)) out.insert(z);
    return out;
}

SupportSet permuted_bruhat_interval(const Permutation& w, const Permutation& gamma) {
    SupportSet out;
    for (const auto& v : enumerate(w.rank()))
        if (permuted_bruhat_leq(v, w, gamma)) out.insert(v);
    return out;
}

std::size_t SupportReport::failures() const {
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return !p.pass; }));
}

SupportReport verify_support_theorem(int n, int jobs, int bound, GrothendieckCache* cache,
                                     const std::function<void(std::size_t, std::size_t)>& progress) {
    if (n < 1) throw InvalidInput("verify: n must be >= 1");
    if (n > bound)
        throw LimitExceeded("verify: n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    if (jobs < 1) throw InvalidInput("verify: jobs must be >= 1");
    auto& memo = pick(cache);
    const auto perms = enumerate(n);
    const std::size_t count = perms.size() * perms.size();

    // Row-major over (w, gamma) in lex order, so pair index order is the
    // sorted report order.
    std::vector<std::optional<PairResult>> results(count);
    std::atomic<std::size_t> next{0};
    std::size_t done = 0;
    std::mutex progress_mutex;

    auto work = [&] {
        for (std::size_t idx = next.fetch_add(1); idx < count; idx = next.fetch_add(1)) {
            const auto& w = perms[idx / perms.size()];
            const auto& gamma = perms[idx % perms.size()];
            const LaurentPoly& g = memo.permuted(w, gamma);
            PairResult r{w, gamma, true, {}, {}, {}};
            for (const auto& z : perms) {
                const bool in_support = !restricts_to_zero(g, z);
                const bool in_interval = permuted_bruhat_leq(z, w, gamma);
                if (in_support) r.support.insert(z);
                if (in_interval) r.interval.insert(z);
                if (in_support != in_interval) {
                    r.pass = false;
                    r.counterexamples.push_back(Counterexample{z, restrict_at(g, z), in_support, in_interval});
                }
            }
            results[idx] = std::move(r);
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(++done, count);
            }
        }
    };

    const int workers = std::min<int>(jobs, static_cast<int>(count));
    std::vector<std::jthread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    pool.clear();

    SupportReport report{n, {}};
    report.pairs.reserve(count);
    for (auto& r : results) report.pairs.push_back(std::move(*r));
    return report;
}

Decomposition decompose(const RestrictionClass& alpha, const Permutation& gamma, GrothendieckCache* cache) {
    const int n = alpha.rank();
    if (gamma.rank() != n) throw InvalidInput("decompose: rank mismatch");
    auto& memo = pick(cache);
    const auto gamma_inv = inverse(gamma);

    // G_v^gamma restricted at z vanishes unless z <=_gamma v, so the system
    // is triangular; solve from the top of the permuted order downwards.
    auto order = alpha.points();
    std::stable_sort(order.begin(), order.end(), [&](const Permutation& a, const Permutation& b) {
        return length(compose(gamma_inv, a)) > length(compose(gamma_inv, b));
    });

    Decomposition coeffs;
    for (const auto& w : order) {
        LaurentPoly residue = alpha.at(w);
        for (const auto& [v, a] : coeffs) residue -= a * restrict_at(memo.permuted(v, gamma), w);
        residue = eliminate_last_y(residue);
        if (residue.is_zero()) continue;
        const LaurentPoly diagonal = eliminate_last_y(restrict_at(memo.permuted(w, gamma), w));
        try {
            coeffs.emplace(w, exact_div(residue, diagonal));
        } catch (const NotDivisible&) {
            throw NotInSpan("decompose: class is not an R(T)-combination of the G^gamma basis (stuck at w=" +
                            w.to_string() + ")");
        }
    }

    if (!recompose(n, coeffs, gamma, &memo).equivalent(alpha))
        throw InternalError("decompose: nonzero residue after triangular solve");
    return coeffs;
}

RestrictionClass recompose(int n, const Decomposition& coeffs, const Permutation& gamma, GrothendieckCache* cache) {
    if (gamma.rank() != n) throw InvalidInput("recompose: rank mismatch");
    auto& memo = pick(cache);
    auto total = RestrictionClass::zero(n);
    for (const auto& [w, a] : coeffs) {
        if (w.rank() != n || a.rank() != n) throw InvalidInput("recompose: rank mismatch");
        total += restrict_all(memo.permuted(w, gamma)).scaled(a);
    }
    return total;
}

} // namespace kflag
