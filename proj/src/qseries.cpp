#include "equigen/qseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace equigen {

QSeries::QSeries(long order, std::vector<Rational> coeffs, Rational offset)
    : order_(order), offset_(std::move(offset)), c_(std::move(coeffs)) {
    if (order < 0) throw precondition_error("series order must be >= 0");
    c_.resize(order + 1, Rational(0));
}

QSeries QSeries::one(long order) {
    QSeries s(order);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::t_power(long order, long k) {
    QSeries s(order);
    if (k < 0) throw precondition_error("t_power needs k >= 0");
    if (k <= order) s.c_[k] = 1;
    return s;
}

QSeries QSeries::truncated(long new_order) const {
    QSeries s(new_order);
    s.offset_ = offset_;
    for (long n = 0; n <= std::min(new_order, order_); ++n) s.c_[n] = c_[n];
    return s;
}

QSeries QSeries::shifted(long k) const {
    QSeries s(order_);
    s.offset_ = offset_;
    if (k >= 0) {
        for (long n = k; n <= order_; ++n) s.c_[n] = c_[n - k];
    } else {
        for (long n = 0; n < -k; ++n) {
            if (c_[n] != 0)
                throw precondition_error("negative shift would truncate a nonzero coefficient");
        }
        for (long n = 0; n <= order_ + k; ++n) s.c_[n] = c_[n - k];
    }
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool QSeries::integral() const {
    if (offset_ != 0) return false;
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integer(x); });
}

QSeries QSeries::operator-() const {
    QSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

namespace {
void require_same_offset(const QSeries& a, const QSeries& b, const char* what) {
    if (a.offset() != b.offset())
        throw precondition_error(std::string(what) + ": fractional offsets differ (" +
                                 rational_str(a.offset()) + " vs " + rational_str(b.offset()) + ")");
}
}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
    require_same_offset(a, b, "series sum");
    QSeries s(std::min(a.order(), b.order()));
    s.offset_ = a.offset_;
    for (long n = 0; n <= s.order_; ++n) s.c_[n] = a.c_[n] + b.c_[n];
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    require_same_offset(a, b, "series difference");
    QSeries s(std::min(a.order(), b.order()));
    s.offset_ = a.offset_;
    for (long n = 0; n <= s.order_; ++n) s.c_[n] = a.c_[n] - b.c_[n];
    return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order(), b.order()));
    s.offset_ = a.offset_ + b.offset_;
    for (long n = 0; n <= s.order_; ++n) {
        Rational acc(0);
        for (long k = 0; k <= n; ++k) {
            if (a.c_[k] == 0) continue;
            acc += a.c_[k] * b.c_[n - k];
        }
        s.c_[n] = acc;
    }
    return s;
}

QSeries QSeries::inverse() const {
    if (c_[0] == 0) throw precondition_error("series inverse needs a unit constant term");
    QSeries s(order_);
    s.offset_ = -offset_;
    const Rational u = 1 / c_[0];
    s.c_[0] = u;
    for (long n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (long k = 1; k <= n; ++k) acc += c_[k] * s.c_[n - k];
        s.c_[n] = -u * acc;
    }
    return s;
}

QSeries QSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries acc = QSeries::one(order_);
    QSeries base = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string QSeries::str() const {
    std::ostringstream os;
    if (offset_ != 0) os << "t^(" << rational_str(offset_) << ") * ";
    for (long n = 0; n <= order_; ++n) {
        if (n) os << ", ";
        os << rational_str(c_[n]);
    }
    return os.str();
}

QCompare qseries_equal(const QSeries& a, const QSeries& b, long order) {
    QCompare r;
    if (a.offset() != b.offset()) {
        r.equal = false;
        r.first_mismatch = -2;
        r.message = "offset mismatch: " + rational_str(a.offset()) + " vs " + rational_str(b.offset());
        return r;
    }
    const long upto = std::min({order, a.order(), b.order()});
    for (long n = 0; n <= upto; ++n) {
        if (a.coeff(n) != b.coeff(n)) {
            r.equal = false;
            r.first_mismatch = n;
            r.message = "first mismatch at t^" + std::to_string(n) + ": " + rational_str(a.coeff(n)) +
                        " vs " + rational_str(b.coeff(n));
            return r;
        }
    }
    r.message = "equal to order " + std::to_string(upto);
    return r;
}

QSeries qseries_exp(const QSeries& a) {
    if (a.offset() != 0) throw precondition_error("exp needs offset 0");
    if (a.coeff(0) != 0) throw precondition_error("exp needs zero constant term");
    const long order = a.order();
    // exp(a)' = a' exp(a):  n e_n = sum_{k=1}^{n} k a_k e_{n-k}
    QSeries e = QSeries::one(order);
    for (long n = 1; n <= order; ++n) {
        Rational acc(0);
        for (long k = 1; k <= n; ++k) {
            if (a.coeff(k) == 0) continue;
            acc += Rational(k) * a.coeff(k) * e.coeff(n - k);
        }
        e.set_coeff(n, acc / Rational(n));
    }
    return e;
}

QSeries qseries_log(const QSeries& a) {
    if (a.offset() != 0) throw precondition_error("log needs offset 0");
    if (a.coeff(0) != 1) throw precondition_error("log needs constant term 1");
    const long order = a.order();
    // a l' = a' with l_0 = 0:  n a_0 l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
    QSeries l(order);
    for (long n = 1; n <= order; ++n) {
        Rational acc = Rational(n) * a.coeff(n);
        for (long k = 1; k < n; ++k) acc -= Rational(k) * l.coeff(k) * a.coeff(n - k);
        l.set_coeff(n, acc / Rational(n));
    }
    return l;
}

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) {
    std::map<long, long> merged;
    for (const auto& f : factors) {
        if (f.scale < 1) throw precondition_error("eta scale must be positive");
        merged[f.scale] += f.exponent;
    }
    for (const auto& [scale, exponent] : merged) {
        if (exponent != 0) factors_.push_back({scale, exponent});
    }
}

EtaQuotient EtaQuotient::parse(const std::string& spec) {
    std::vector<EtaFactor> factors;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token.empty()) continue;
        const size_t caret = token.find('^');
        EtaFactor f;
        try {
            if (caret == std::string::npos) {
                f.scale = std::stol(token);
                f.exponent = 1;
            } else {
                f.scale = std::stol(token.substr(0, caret));
                f.exponent = std::stol(token.substr(caret + 1));
            }
        } catch (...) {
            throw schema_error("bad eta factor '" + token + "' (want scale^exponent)");
        }
        factors.push_back(f);
    }
    return EtaQuotient(std::move(factors));
}

std::string EtaQuotient::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ",";
        os << factors_[i].scale << "^" << factors_[i].exponent;
    }
    return os.str();
}

QSeries euler_product_pow(long scale, long exponent, long order) {
    // (1 - t^(scale*m))^exponent over m >= 1, truncated
    QSeries acc = QSeries::one(order);
    for (long m = 1; scale * m <= order; ++m) {
        QSeries factor = QSeries::one(order);
        factor.set_coeff(scale * m, Rational(-1));
        acc = acc * factor.pow(exponent);
    }
    return acc;
}

QSeries eta_quotient_expand(const EtaQuotient& q, long order) {
    QSeries acc = QSeries::one(order);
    Rational offset(0);
    for (const auto& f : q.factors()) {
        acc = acc * euler_product_pow(f.scale, f.exponent, order);
        offset += frac(f.scale * f.exponent, 24);
    }
    return QSeries(order, acc.coeffs(), offset);
}

Rational eta_weight(const EtaQuotient& q) {
    long s = 0;
    for (const auto& f : q.factors()) s += f.exponent;
    return frac(s, 2);
}

long partition_count(long n, long d) {
    if (n < 0 || d < 0) return 0;
    if (n == 0) return d == 0 ? 1 : 0;
    if (d == 0) return 0;
    // p(n, d) = p(n-1, d-1) + p(n-d, d), dense DP up to n
    static std::mutex memo_mutex;
    static std::vector<std::vector<long>> memo;  // memo[n][d], d <= n
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (static_cast<long>(memo.size()) <= n) {
        const long old = static_cast<long>(memo.size());
        memo.resize(n + 1);
        for (long m = old; m <= n; ++m) {
            memo[m].assign(m + 1, 0);
            if (m == 0) {
                memo[0] = {1};
                continue;
            }
            for (long k = 1; k <= m; ++k) {
                memo[m][k] = memo[m - 1][k - 1];
                if (m - k >= k) memo[m][k] += memo[m - k][k];
            }
        }
    }
    return d <= n ? memo[n][d] : 0;
}

QSeries partition_series(long max_parts, long order) {
    QSeries s(order);
    for (long n = 0; n <= order; ++n) {
        long total = 0;
        const long dmax = max_parts < 0 ? n : std::min(max_parts, n);
        for (long d = 0; d <= dmax; ++d) total += partition_count(n, d);
        s.set_coeff(n, Rational(total));
    }
    return s;
}

Rational ZTPoly::coeff(long n, long d) const {
    if (n < 0 || n >= static_cast<long>(tz_.size())) return Rational(0);
    if (d < 0 || d >= static_cast<long>(tz_[n].size())) return Rational(0);
    return tz_[n][d];
}

void ZTPoly::add(long n, long d, const Rational& v) {
    if (n < 0 || n > t_order() || v == 0) return;
    if (d < 0) throw precondition_error("negative z-degree");
    if (static_cast<long>(tz_[n].size()) <= d) tz_[n].resize(d + 1, Rational(0));
    tz_[n][d] += v;
    trim(n);
}

void ZTPoly::trim(long n) {
    auto& row = tz_[n];
    while (!row.empty() && row.back() == 0) row.pop_back();
}

bool ZTPoly::operator==(const ZTPoly& o) const { return tz_ == o.tz_; }

ZTPoly operator*(const ZTPoly& a, const ZTPoly& b) {
    ZTPoly out(std::min(a.t_order(), b.t_order()));
    for (long n = 0; n <= out.t_order(); ++n) {
        for (long k = 0; k <= n; ++k) {
            for (long da = 0; da <= a.z_degree(k); ++da) {
                const Rational va = a.coeff(k, da);
                if (va == 0) continue;
                for (long db = 0; db <= b.z_degree(n - k); ++db) {
                    const Rational vb = b.coeff(n - k, db);
                    if (vb == 0) continue;
                    out.add(n, da + db, va * vb);
                }
            }
        }
    }
    return out;
}

ZTPoly operator+(const ZTPoly& a, const ZTPoly& b) {
    ZTPoly out(std::min(a.t_order(), b.t_order()));
    for (long n = 0; n <= out.t_order(); ++n) {
        for (long d = 0; d <= std::max(a.z_degree(n), b.z_degree(n)); ++d)
            out.add(n, d, a.coeff(n, d) + b.coeff(n, d));
    }
    return out;
}

QSeries ZTPoly::at_z_one() const {
    QSeries s(t_order());
    for (long n = 0; n <= t_order(); ++n) {
        Rational acc(0);
        for (long d = 0; d <= z_degree(n); ++d) acc += coeff(n, d);
        s.set_coeff(n, acc);
    }
    return s;
}

std::string ZTPoly::str() const {
    std::ostringstream os;
    for (long n = 0; n <= t_order(); ++n) {
        if (n) os << "\n";
        os << "t^" << n << ":";
        bool any = false;
        for (long d = 0; d <= z_degree(n); ++d) {
            if (coeff(n, d) == 0) continue;
            os << " ";
            if (any) os << "+ ";
            os << rational_str(coeff(n, d));
            if (d > 0) os << "*z^" << d;
            any = true;
        }
        if (!any) os << " 0";
    }
    return os.str();
}

ZTPoly cell_count_series(long order) {
    ZTPoly out(order);
    out.add(0, 0, Rational(1));
    // multiply by 1/(1 - z^{i-1} t^i) incrementally: c[n][d] += c[n-i][d-(i-1)]
    for (long i = 1; i <= order; ++i) {
        for (long n = i; n <= order; ++n) {
            for (long d = i - 1; d <= out.z_degree(n - i) + (i - 1); ++d) {
                const Rational v = out.coeff(n - i, d - (i - 1));
                if (v != 0) out.add(n, d, v);
            }
        }
    }
    return out;
}

}  // namespace equigen
