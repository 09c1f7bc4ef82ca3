#include "kflag/weight.hpp"

#include <algorithm>
#include <cctype>

#include "kflag/errors.hpp"

namespace kflag {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || den.empty() ||
        !std::all_of(den.begin(), den.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InvalidInput("not an exact rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class d{std::string(den)};
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational q(mpz_class(n), d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInput("weight vector must be nonempty");
    Rational sum = 0;
    for (const auto& e : entries_) sum += e;
    if (sum != 0)
        throw InvalidInput("weight vector entries must sum to zero, got sum " + format_rational(sum));
}

WeightVector WeightVector::parse(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return WeightVector(std::move(out));
}

bool WeightVector::is_generic() const {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (!(entries_[i - 1] > entries_[i])) return false;
    return true;
}

WeightVector WeightVector::scaled(const Rational& factor) const {
    std::vector<Rational> out(entries_);
    for (auto& e : out) e *= factor;
    return WeightVector(std::move(out));
}

std::string WeightVector::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += format_rational(entries_[i]);
    }
    return s;
}

} // namespace kflag
