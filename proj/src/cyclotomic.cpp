#include "equigen/cyclotomic.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace equigen {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw schema_error("empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw schema_error("bad rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw schema_error("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw schema_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

long rational_to_long(const Rational& q) {
    if (!is_integer(q)) throw precondition_error("expected integer, got " + rational_str(q));
    if (!q.get_num().fits_slong_p()) throw precondition_error("integer out of range: " + rational_str(q));
    return q.get_num().get_si();
}

Integer rational_to_integer(const Rational& q) {
    if (!is_integer(q)) throw precondition_error("expected integer, got " + rational_str(q));
    return q.get_num();
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

namespace {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

void poly_trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// In-place remainder of p modulo monic divisor m.
void poly_mod(Poly& p, const Poly& m) {
    const size_t dm = m.size() - 1;
    while (p.size() > dm) {
        const Rational lead = p.back();
        const size_t shift = p.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i < dm; ++i) p[shift + i] -= lead * m[i];
        }
        p.pop_back();
    }
    if (p.empty()) p.assign(1, Rational(0));
}

// Exact quotient of p by monic divisor m (remainder must vanish).
Poly poly_div_exact(Poly p, const Poly& m) {
    const size_t dm = m.size() - 1;
    if (p.size() <= dm) return Poly{Rational(0)};
    Poly q(p.size() - dm, Rational(0));
    while (p.size() > dm) {
        const Rational lead = p.back();
        const size_t shift = p.size() - 1 - dm;
        q[shift] = lead;
        if (lead != 0) {
            for (size_t i = 0; i < dm; ++i) p[shift + i] -= lead * m[i];
        }
        p.pop_back();
    }
    return q;
}

std::mutex cache_mutex;

const Poly& cyclotomic_poly(long n) {
    static std::map<long, Poly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors_of(n)) {
        if (d == n) continue;
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            // recursive fill without re-locking: compute ancestors first
            // (divisors are ascending, so all proper divisors are present
            // once we process them in order)
            Poly nd(d + 1, Rational(0));
            nd[0] = -1;
            nd[d] = 1;
            for (long e : divisors_of(d)) {
                if (e == d) continue;
                nd = poly_div_exact(std::move(nd), cache.at(e));
            }
            poly_trim(nd);
            jt = cache.emplace(d, std::move(nd)).first;
        }
        num = poly_div_exact(std::move(num), jt->second);
    }
    poly_trim(num);
    return cache.emplace(n, std::move(num)).first->second;
}

// Power-basis coordinates (conductor n) of zeta_n^(i*n/d) for i < phi(d):
// the embedding matrix used to test membership in Q(zeta_d).
const std::vector<Poly>& embedding_columns(long n, long d) {
    static std::map<std::pair<long, long>, std::vector<Poly>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({n, d});
        if (it != cache.end()) return it->second;
    }
    const Poly& phi_n = cyclotomic_poly(n);
    const long phin = static_cast<long>(phi_n.size()) - 1;
    const long phid = euler_phi(d);
    std::vector<Poly> cols;
    cols.reserve(phid);
    for (long i = 0; i < phid; ++i) {
        long e = (i * (n / d)) % n;
        Poly p(e + 1, Rational(0));
        p[e] = 1;
        poly_mod(p, phi_n);
        p.resize(phin, Rational(0));
        cols.push_back(std::move(p));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(n, d), std::move(cols)).first->second;
}

}  // namespace

Cyclotomic Cyclotomic::reduced(long n, std::vector<Rational> dense) {
    if (n < 1) throw precondition_error("conductor must be positive");
    Cyclotomic x;
    if (n == 1) {
        Rational v(0);
        for (auto& c : dense) v += c;
        x.conductor_ = 1;
        x.coeffs_ = {v};
        return x;
    }
    poly_mod(dense, cyclotomic_poly(n));
    dense.resize(euler_phi(n), Rational(0));
    x.conductor_ = n;
    x.coeffs_ = std::move(dense);
    x.canonicalize_conductor();
    return x;
}

void Cyclotomic::canonicalize_conductor() {
    if (conductor_ == 1) return;
    bool rational_only = true;
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            rational_only = false;
            break;
        }
    }
    if (rational_only) {
        coeffs_.resize(1);
        conductor_ = 1;
        return;
    }
    for (long d : divisors_of(conductor_)) {
        if (d == 1 || d == conductor_) continue;
        const auto& cols = embedding_columns(conductor_, d);
        const size_t rows = coeffs_.size();
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
        auto res = detail::solve_linear(std::move(a), coeffs_);
        if (res.status == detail::LinearSolve::Status::Unique) {
            conductor_ = d;
            coeffs_ = std::move(res.solution);
            canonicalize_conductor();  // d's own divisors were tried for the old
                                       // conductor, not for d; settle fully
            return;
        }
    }
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw precondition_error("root_of_unity: order must be positive");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> dense(k + 1, Rational(0));
    dense[k] = 1;
    return reduced(n, std::move(dense));
}

Cyclotomic Cyclotomic::from_exponents(long n, const std::vector<Rational>& coeff) {
    if (n < 1) throw precondition_error("from_exponents: conductor must be positive");
    std::vector<Rational> dense(n, Rational(0));
    for (size_t j = 0; j < coeff.size(); ++j) dense[j % n] += coeff[j];
    return reduced(n, std::move(dense));
}

bool Cyclotomic::is_zero() const {
    return conductor_ == 1 && coeffs_[0] == 0;
}

const Rational& Cyclotomic::rational_value() const {
    if (conductor_ != 1) throw precondition_error("value is not rational: " + str());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (conductor_ == 1) return *this;
    long n = conductor_;
    k %= n;
    if (k < 0) k += n;
    if (std::gcd(k, n) != 1) throw precondition_error("galois exponent not coprime to conductor");
    std::vector<Rational> dense(n, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        dense[(static_cast<long>(i) * k) % n] += coeffs_[i];
    }
    return reduced(n, std::move(dense));
}

Cyclotomic Cyclotomic::conj() const {
    if (conductor_ == 1) return *this;
    return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (conductor_ == 1 && o.conductor_ == 1) {
        coeffs_[0] += o.coeffs_[0];
        return *this;
    }
    const long n = lcm_long(conductor_, o.conductor_);
    std::vector<Rational> dense(n, Rational(0));
    const long sa = n / conductor_;
    for (size_t i = 0; i < coeffs_.size(); ++i) dense[(static_cast<long>(i) * sa) % n] += coeffs_[i];
    const long sb = n / o.conductor_;
    for (size_t i = 0; i < o.coeffs_.size(); ++i) dense[(static_cast<long>(i) * sb) % n] += o.coeffs_[i];
    *this = reduced(n, std::move(dense));
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (conductor_ == 1 && o.conductor_ == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    if (conductor_ == 1) {
        const Rational s = coeffs_[0];
        *this = o;
        return *this *= s;
    }
    if (o.conductor_ == 1) return *this *= o.coeffs_[0];
    const long n = lcm_long(conductor_, o.conductor_);
    std::vector<Rational> da(n, Rational(0)), db(n, Rational(0));
    const long sa = n / conductor_;
    for (size_t i = 0; i < coeffs_.size(); ++i) da[(static_cast<long>(i) * sa) % n] += coeffs_[i];
    const long sb = n / o.conductor_;
    for (size_t i = 0; i < o.coeffs_.size(); ++i) db[(static_cast<long>(i) * sb) % n] += o.coeffs_[i];
    poly_trim(da);
    poly_trim(db);
    *this = reduced(n, poly_mul(da, db));
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
    if (s == 0) {
        conductor_ = 1;
        coeffs_ = {Rational(0)};
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::string Cyclotomic::str() const {
    if (conductor_ == 1) return rational_str(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        if (j == 0) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    os << "@" << conductor_;
    return os.str();
}

namespace {

// one term of a cyclotomic literal: [+-] [rational] [* ] [z [^ exp]]
struct Term {
    Rational coeff;
    long exponent = 0;
};

Term parse_term(const std::string& t) {
    Term out;
    std::string s = t;
    bool neg = false;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t num_end = pos;
    while (num_end < s.size() && (std::isdigit(static_cast<unsigned char>(s[num_end])) || s[num_end] == '/'))
        ++num_end;
    std::string num = s.substr(pos, num_end - pos);
    pos = num_end;
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'z') {
        ++pos;
        out.exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t exp_end = pos;
            while (exp_end < s.size() && std::isdigit(static_cast<unsigned char>(s[exp_end]))) ++exp_end;
            if (exp_end == pos) throw schema_error("bad exponent in cyclotomic term '" + t + "'");
            out.exponent = std::stol(s.substr(pos, exp_end - pos));
            pos = exp_end;
        }
    }
    if (pos != s.size()) throw schema_error("bad cyclotomic term '" + t + "'");
    out.coeff = num.empty() ? Rational(1) : parse_rational(num);
    if (neg) out.coeff = -out.coeff;
    return out;
}

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& literal) {
    std::string body = literal;
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               body.end());
    if (body.empty()) throw schema_error("empty cyclotomic literal");
    long n = 1;
    const size_t at = body.find('@');
    if (at != std::string::npos) {
        const std::string cond = body.substr(at + 1);
        if (cond.empty() || !std::all_of(cond.begin(), cond.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw schema_error("bad conductor in '" + literal + "'");
        n = std::stol(cond);
        if (n < 1) throw schema_error("bad conductor in '" + literal + "'");
        body = body.substr(0, at);
    }
    if (body.empty()) throw schema_error("empty cyclotomic body in '" + literal + "'");
    // split into signed terms
    std::vector<std::string> terms;
    size_t start = 0;
    for (size_t i = 1; i <= body.size(); ++i) {
        if (i == body.size() || ((body[i] == '+' || body[i] == '-') && body[i - 1] != '^' && body[i - 1] != '/')) {
            terms.push_back(body.substr(start, i - start));
            start = i;
        }
    }
    std::vector<Rational> dense(n, Rational(0));
    for (const auto& t : terms) {
        Term term = parse_term(t);
        if (term.exponent >= n && n == 1 && term.exponent > 0)
            throw schema_error("term uses z but conductor is 1 in '" + literal + "'");
        dense[term.exponent % n] += term.coeff;
    }
    return reduced(n, std::move(dense));
}

}  // namespace equigen
