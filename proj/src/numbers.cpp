#include "gridbasis/numbers.hpp"

#include "gridbasis/errors.hpp"

namespace gridbasis {

Int gcd_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(std::vector<Int>& v) {
    Int g = gcd_of(v);
    if (g == 0) return;
    int lead_sign = 0;
    for (const Int& x : v) {
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    }
    if (lead_sign < 0) g = -g;
    if (g == 1) return;
    for (Int& x : v) x /= g;  // exact: g divides every entry
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
    const size_t slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den))
        throw ValueError("not a rational number: '" + s + "'");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ValueError("not a rational number: '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ValueError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace gridbasis
