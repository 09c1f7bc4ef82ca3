#include "kflag/kirwan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "kflag/errors.hpp"
#include "kflag/gkm.hpp"

namespace kflag {

namespace {

std::size_t as_index(int i) { return static_cast<std::size_t>(i); }

void require_pair(const WeightVector& lambda, const WeightVector& mu, int bound) {
    if (lambda.rank() != mu.rank()) throw InvalidInput("lambda and mu have different ranks");
    if (!lambda.is_generic())
        throw InvalidInput("lambda must be strictly decreasing (generic orbit), got " + lambda.to_string());
    if (lambda.rank() > bound)
        throw LimitExceeded("n=" + std::to_string(lambda.rank()) + " exceeds bound " + std::to_string(bound));
}

// tails[p][k-1] = sum_{i=k+1}^{n} nu_{perm_p(i)}, for k = 1..n-1.
std::vector<std::vector<Rational>> tail_sums(const std::vector<Permutation>& perms, const WeightVector& nu) {
    const int n = nu.rank();
    std::vector<std::vector<Rational>> out;
    out.reserve(perms.size());
    for (const auto& p : perms) {
        std::vector<Rational> row(as_index(std::max(n - 1, 0)));
        Rational acc = 0;
        for (int k = n - 1; k >= 1; --k) {
            acc += nu(p(k + 1));
            row[as_index(k - 1)] = acc;
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

WeightVector moment_image(const WeightVector& lambda, const Permutation& omega) {
    return act_on_weights(omega, lambda);
}

HalfSpaceSpec::HalfSpaceSpec(std::vector<Rational> coefficients, std::optional<Origin> origin)
    : b_(std::move(coefficients)), origin_(std::move(origin)) {
    if (b_.empty()) throw InvalidInput("half-space functional must be nonempty");
}

HalfSpaceSpec HalfSpaceSpec::eta(const Permutation& gamma, int k) {
    const int n = gamma.rank();
    if (k < 1 || k > n - 1)
        throw InvalidInput("eta: k=" + std::to_string(k) + " out of range 1.." + std::to_string(n - 1));
    std::vector<Rational> b(as_index(n), 0);
    for (int i = k + 1; i <= n; ++i) b[as_index(gamma(i) - 1)] = 1;
    return HalfSpaceSpec(std::move(b), Origin{gamma, k});
}

Rational HalfSpaceSpec::evaluate(const WeightVector& nu) const {
    if (nu.rank() != rank()) throw InvalidInput("half-space: rank mismatch");
    Rational s = 0;
    for (int i = 1; i <= rank(); ++i) s += b_[as_index(i - 1)] * nu(i);
    return s;
}

bool HalfSpaceSpec::contains(const WeightVector& point, const WeightVector& mu) const {
    return evaluate(point) <= evaluate(mu);
}

Rational eta_value(const Permutation& gamma, int k, const WeightVector& nu) {
    if (gamma.rank() != nu.rank()) throw InvalidInput("eta_value: rank mismatch");
    return HalfSpaceSpec::eta(gamma, k).evaluate(nu);
}

RegularityReport is_regular(const WeightVector& lambda, const WeightVector& mu, int bound) {
    require_pair(lambda, mu, bound);
    const int n = lambda.rank();
    const auto perms = enumerate(n);
    const auto lt = tail_sums(perms, lambda);
    const auto mt = tail_sums(perms, mu);
    RegularityReport report{true, {}};
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b)
            for (int k = 1; k < n; ++k)
                if (lt[a][as_index(k - 1)] == mt[b][as_index(k - 1)]) report.walls.push_back({perms[a], perms[b], k});
    report.regular = report.walls.empty();
    return report;
}

std::vector<KernelGenerator> kernel_generators(const WeightVector& lambda, const WeightVector& mu, int jobs,
                                               GrothendieckCache* cache, int bound) {
    if (jobs < 1) throw InvalidInput("kernel: jobs must be >= 1");
    auto reg = is_regular(lambda, mu, bound);
    if (!reg.regular) {
        const auto& w = reg.walls.front();
        throw NotRegular("(lambda, mu) lies on a wall: v=" + w.v.to_string() + " gamma=" + w.gamma.to_string() +
                         " k=" + std::to_string(w.k) + " (" + std::to_string(reg.walls.size()) + " walls total)");
    }
    auto& memo = cache ? *cache : shared_cache();
    const int n = lambda.rank();
    const auto perms = enumerate(n);
    const auto lt = tail_sums(perms, lambda);
    const auto mt = tail_sums(perms, mu);

    // One slot per v; each worker fills whole rows, rows are concatenated in
    // lex order of v, and gamma is iterated in lex order inside a row.
    std::vector<std::vector<KernelGenerator>> rows(perms.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t a = next.fetch_add(1); a < perms.size(); a = next.fetch_add(1)) {
            const auto& v = perms[a];
            for (std::size_t b = 0; b < perms.size(); ++b) {
                std::vector<int> witnesses;
                for (int k = 1; k < n; ++k)
                    if (lt[a][as_index(k - 1)] < mt[b][as_index(k - 1)]) witnesses.push_back(k);
                if (witnesses.empty()) continue;
                const auto& gamma = perms[b];
                // pi_v G_id(x, y_gamma) is G_omega^gamma with omega = gamma v^{-1}.
                const auto omega = compose(gamma, inverse(v));
                rows[a].push_back(KernelGenerator{v, gamma, std::move(witnesses), memo.permuted(omega, gamma)});
            }
        }
    };
    const int workers = std::min<int>(jobs, static_cast<int>(perms.size()));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
    }

    std::vector<KernelGenerator> out;
    for (auto& row : rows)
        for (auto& g : row) out.push_back(std::move(g));
    return out;
}

std::vector<SoundnessCheck> half_space_soundness(const KernelGenerator& gen, const WeightVector& lambda,
                                                 const WeightVector& mu) {
    if (gen.witnesses.empty()) throw SoundnessFailure("generator has no witness k");
    if (gen.v.rank() != lambda.rank() || gen.gamma.rank() != lambda.rank() || mu.rank() != lambda.rank())
        throw InvalidInput("half_space_soundness: rank mismatch");
    std::vector<SoundnessCheck> certificate;
    const auto supp = support(gen.poly);
    for (int k : gen.witnesses) {
        const auto eta = HalfSpaceSpec::eta(gen.gamma, k);
        const Rational rhs = eta.evaluate(mu);
        for (const auto& z : supp) {
            const Rational lhs = eta.evaluate(moment_image(lambda, z));
            if (!(lhs < rhs))
                throw SoundnessFailure("generator (v=" + gen.v.to_string() + ", gamma=" + gen.gamma.to_string() +
                                       "): support point z=" + z.to_string() + " violates k=" + std::to_string(k) +
                                       ": " + format_rational(lhs) + " >= " + format_rational(rhs));
            certificate.push_back(SoundnessCheck{z, k, lhs, rhs});
        }
    }
    return certificate;
}

Presentation presentation(const WeightVector& lambda, const WeightVector& mu, int jobs, GrothendieckCache* cache) {
    auto kernel = kernel_generators(lambda, mu, jobs, cache);
    const int n = lambda.rank();
    std::vector<LaurentPoly> ideal;
    for (int i = 1; i <= n; ++i)
        ideal.push_back(elementary_symmetric(i, Block::X, n) - elementary_symmetric(i, Block::Y, n));
    return Presentation{n, lambda, mu, std::move(ideal),
                        elementary_symmetric(n, Block::Y, n) - LaurentPoly::one(n), std::move(kernel)};
}

} // namespace kflag
