#include "kan/rational.hpp"

#include <cctype>

namespace kan {

Rat parse_rat(std::string_view text) {
    // Trim whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    const auto slash = text.find('/');
    const std::string num_part(text.substr(0, slash));
    std::string den_part = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    if (num_part.empty() || den_part.empty())
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");

    Int num, den;
    if (num.set_str(num_part, 10) != 0 || den.set_str(den_part, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    return make_rat(std::move(num), std::move(den));
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned long n) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    return out;  // base reduced => power reduced
}

Int int_pow(const Int& base, unsigned long n) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n);
    return out;
}

Int floor_div(const Int& n, const Int& d) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int ceil_div(const Int& n, const Int& d) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace kan
