#include "orthoset/rational.hpp"

#include <cmath>

#include "orthoset/errors.hpp"

namespace orthoset {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw ParseError("malformed rational: '" + text + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat pow_rat(const Rat& r, long e) {
    if (e == 0) return rat(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && r == 0) throw ContractViolation("pow_rat: 0 to a negative power");
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), k);
    out.canonicalize();
    return invert ? Rat(1) / out : out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int out;
    if (k > n) return 0;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int floor_kth_root(const Int& x, unsigned long k) {
    if (x < 0) throw ContractViolation("floor_kth_root: negative radicand");
    if (k == 0) throw ContractViolation("floor_kth_root: zeroth root");
    Int out;
    mpz_root(out.get_mpz_t(), x.get_mpz_t(), k);
    return out;
}

double log2_of(const Int& x) {
    if (x <= 0) throw ContractViolation("log2_of: nonpositive argument");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace orthoset
