#include "kflag/laurent.hpp"

#include <algorithm>
#include <unordered_map>

#include "kflag/errors.hpp"

namespace kflag {

namespace {

std::size_t as_index(int i) { return static_cast<std::size_t>(i); }

void require_rank(const LaurentPoly& f, const LaurentPoly& g, const char* what) {
    if (f.rank() != g.rank())
        throw InvalidInput(std::string(what) + ": rank mismatch (" + std::to_string(f.rank()) + " vs " +
                           std::to_string(g.rank()) + ")");
}

using TermMap = std::unordered_map<Exponents, Coefficient, ExponentsHash>;

std::vector<Term> drain_sorted(TermMap& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back(Term{e, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return exps_greater(a.exps, b.exps); });
    return out;
}

// Merge two canonical term lists; `sign` is +1 or -1 for the second operand.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && exps_greater(a[i].exps, b[j].exps))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || exps_greater(b[j].exps, a[i].exps)) {
            out.push_back(b[j]);
            if (sign < 0) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Coefficient c = sign < 0 ? Coefficient(a[i].coeff - b[j].coeff) : Coefficient(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back(Term{a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::string var_power(char name, int index, std::int32_t power) {
    std::string s(1, name);
    s += std::to_string(index);
    if (power != 1) s += "^" + std::to_string(power);
    return s;
}

} // namespace

bool exps_greater(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : e) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
        h *= 0x100000001b3ULL;
    }
    return h;
}

LaurentPoly::LaurentPoly(int n) : n_(n) {
    if (n < 1) throw InvalidInput("polynomial rank must be >= 1");
}

LaurentPoly LaurentPoly::constant(int n, const Coefficient& c) {
    return monomial(n, Exponents(as_index(2 * n), 0), c);
}

LaurentPoly LaurentPoly::monomial(int n, Exponents exps, const Coefficient& c) {
    LaurentPoly p(n);
    if (exps.size() != as_index(2 * n)) throw InvalidInput("monomial: exponent vector has wrong length");
    if (c != 0) p.terms_.push_back(Term{std::move(exps), c});
    return p;
}

LaurentPoly LaurentPoly::x(int n, int i, int power) {
    if (i < 1 || i > n) throw InvalidInput("x index out of range");
    Exponents e(as_index(2 * n), 0);
    e[as_index(i - 1)] = power;
    return monomial(n, std::move(e));
}

LaurentPoly LaurentPoly::y(int n, int i, int power) {
    if (i < 1 || i > n) throw InvalidInput("y index out of range");
    Exponents e(as_index(2 * n), 0);
    e[as_index(n + i - 1)] = power;
    return monomial(n, std::move(e));
}

LaurentPoly LaurentPoly::from_terms(int n, std::vector<Term> terms) {
    LaurentPoly p(n);
    TermMap acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        if (t.exps.size() != as_index(2 * n)) throw InvalidInput("term has wrong exponent length");
        acc[std::move(t.exps)] += t.coeff;
    }
    p.terms_ = drain_sorted(acc);
    return p;
}

bool LaurentPoly::is_x_free() const noexcept {
    for (const auto& t : terms_)
        for (int i = 0; i < n_; ++i)
            if (t.exps[as_index(i)] != 0) return false;
    return true;
}

bool LaurentPoly::is_unit_monomial() const noexcept {
    return terms_.size() == 1 && terms_.front().coeff == 1;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    require_rank(*this, g, "add");
    terms_ = merge(terms_, g.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    require_rank(*this, g, "sub");
    terms_ = merge(terms_, g.terms_, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    require_rank(f, g, "mul");
    LaurentPoly p(f.n_);
    if (f.is_zero() || g.is_zero()) return p;
    TermMap acc;
    acc.reserve(f.size() * g.size());
    Exponents e(as_index(2 * f.n_));
    for (const auto& a : f.terms_) {
        for (const auto& b : g.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exps[k] + b.exps[k];
            auto [it, fresh] = acc.try_emplace(e);
            mpz_addmul(it->second.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
        }
    }
    p.terms_ = drain_sorted(acc);
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) {
    *this = *this * g;
    return *this;
}

LaurentPoly LaurentPoly::scaled(const Coefficient& c) const {
    LaurentPoly p(n_);
    if (c == 0) return p;
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::vector<std::string> factors;
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < 2 * n_; ++k) {
                const auto e = t.exps[as_index(k)];
                if (e == 0 || (pass == 0) != (e > 0)) continue;
                factors.push_back(k < n_ ? var_power('x', k + 1, e) : var_power('y', k - n_ + 1, e));
            }
        }
        Coefficient mag = abs(t.coeff);
        std::string body;
        if (factors.empty() || mag != 1) body = mag.get_str();
        for (const auto& f : factors) {
            if (!body.empty()) body += '*';
            body += f;
        }
        out += body;
    }
    return out;
}

namespace {

LaurentPoly permute_block(const Permutation& sigma, const LaurentPoly& f, int offset) {
    const int n = f.rank();
    if (sigma.rank() != n) throw InvalidInput("permute: rank mismatch");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Term u = t;
        for (int i = 1; i <= n; ++i) u.exps[as_index(offset + sigma(i) - 1)] = t.exps[as_index(offset + i - 1)];
        out.push_back(std::move(u));
    }
    return LaurentPoly::from_terms(n, std::move(out));
}

} // namespace

LaurentPoly permute_x(const Permutation& sigma, const LaurentPoly& f) { return permute_block(sigma, f, 0); }

LaurentPoly permute_y(const Permutation& sigma, const LaurentPoly& f) {
    return permute_block(sigma, f, f.rank());
}

LaurentPoly substitute(const LaurentPoly& f, const Assignment& assignment) {
    const int n = f.rank();
    // Column k of the linear map on exponents is the image exponent of variable k.
    std::vector<std::pair<int, Exponents>> images;
    for (const auto& [var, value] : assignment) {
        if (value.rank() != n) throw InvalidInput("substitute: rank mismatch");
        if (var.index < 1 || var.index > n) throw InvalidInput("substitute: variable index out of range");
        if (!value.is_unit_monomial())
            throw InvalidInput("substitute: assigned value must be a monomial with coefficient +1, got " +
                               value.to_string());
        int k = (var.block == Block::X ? 0 : n) + var.index - 1;
        images.emplace_back(k, value.leading_term().exps);
    }
    if (images.empty()) return f;
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Term u = t;
        for (const auto& [k, img] : images) {
            const auto power = t.exps[as_index(k)];
            if (power == 0) continue;
            u.exps[as_index(k)] -= power;
            for (std::size_t j = 0; j < u.exps.size(); ++j) u.exps[j] += power * img[j];
        }
        out.push_back(std::move(u));
    }
    return LaurentPoly::from_terms(n, std::move(out));
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    require_rank(f, g, "exact_div");
    if (g.is_zero()) throw InvalidInput("exact_div: division by zero");
    const int n = f.rank();
    if (f.is_zero()) return LaurentPoly(n);

    // Every quotient exponent lies in the box [minf - ming, maxf - maxg]
    // coordinatewise; leaving it proves there is no quotient.
    const std::size_t m = as_index(2 * n);
    auto bounds = [m](const LaurentPoly& p) {
        Exponents lo = p.leading_term().exps, hi = p.leading_term().exps;
        for (const auto& t : p.terms())
            for (std::size_t k = 0; k < m; ++k) {
                lo[k] = std::min(lo[k], t.exps[k]);
                hi[k] = std::max(hi[k], t.exps[k]);
            }
        return std::pair{lo, hi};
    };
    auto [flo, fhi] = bounds(f);
    auto [glo, ghi] = bounds(g);
    Exponents qlo(m), qhi(m);
    for (std::size_t k = 0; k < m; ++k) {
        qlo[k] = flo[k] - glo[k];
        qhi[k] = fhi[k] - ghi[k];
        if (qlo[k] > qhi[k]) throw NotDivisible("exact_div: " + f.to_string() + " by " + g.to_string());
    }

    auto greater = [](const Exponents& a, const Exponents& b) { return exps_greater(a, b); };
    std::map<Exponents, Coefficient, decltype(greater)> rem(greater);
    for (const auto& t : f.terms()) rem.emplace(t.exps, t.coeff);

    const Term& lead = g.leading_term();
    std::vector<Term> quotient;
    Exponents qe(m), e(m);
    Coefficient qc, r;
    while (!rem.empty()) {
        auto top = rem.begin();
        for (std::size_t k = 0; k < m; ++k) {
            qe[k] = top->first[k] - lead.exps[k];
            if (qe[k] < qlo[k] || qe[k] > qhi[k])
                throw NotDivisible("exact_div: " + f.to_string() + " by " + g.to_string());
        }
        mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
        if (r != 0) throw NotDivisible("exact_div: coefficient not divisible in " + f.to_string());
        for (const auto& t : g.terms()) {
            for (std::size_t k = 0; k < m; ++k) e[k] = qe[k] + t.exps[k];
            auto [it, fresh] = rem.try_emplace(e);
            mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
            if (it->second == 0) rem.erase(it);
        }
        quotient.push_back(Term{qe, qc});
    }
    // Quotient terms are produced in strictly descending order.
    return LaurentPoly::from_terms(n, std::move(quotient));
}

LaurentPoly eliminate_last_y(const LaurentPoly& f) {
    const int n = f.rank();
    if (!f.is_x_free()) throw InvalidInput("canonical zero test needs an x-free polynomial, got " + f.to_string());
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Term u = t;
        const auto last = t.exps[as_index(2 * n - 1)];
        for (int j = 0; j < n - 1; ++j) u.exps[as_index(n + j)] -= last;
        u.exps[as_index(2 * n - 1)] = 0;
        out.push_back(std::move(u));
    }
    return LaurentPoly::from_terms(n, std::move(out));
}

bool canonical_zero_test(const LaurentPoly& f) { return eliminate_last_y(f).is_zero(); }

LaurentPoly elementary_symmetric(int i, Block block, int n) {
    if (n < 1 || i < 1 || i > n)
        throw InvalidInput("elementary_symmetric: index " + std::to_string(i) + " out of range for n=" +
                           std::to_string(n));
    const int offset = block == Block::X ? 0 : n;
    std::vector<Term> out;
    // Walk all i-subsets of {0..n-1} via a selection mask.
    std::vector<bool> mask(as_index(n), false);
    std::fill(mask.begin(), mask.begin() + i, true);
    do {
        Exponents e(as_index(2 * n), 0);
        for (int k = 0; k < n; ++k)
            if (mask[as_index(k)]) e[as_index(offset + k)] = 1;
        out.push_back(Term{std::move(e), 1});
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return LaurentPoly::from_terms(n, std::move(out));
}

} // namespace kflag
