#include "equigen/printing.hpp"

#include <sstream>

namespace equigen {

std::string format_decomposition(const std::vector<Integer>& multiplicities) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < multiplicities.size(); ++i) {
        const Integer& m = multiplicities[i];
        if (m == 0) continue;
        Integer a = m;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a.get_str();
        os << "χ" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string format_decomposition(const ClassFunction& f) {
    return format_decomposition(decompose(f));
}

std::string format_class_values(const ClassFunction& f) {
    std::ostringstream os;
    os << "(";
    for (int c = 0; c < f.num_classes(); ++c) {
        if (c) os << ", ";
        os << f.value(c).str();
    }
    os << ")";
    return os.str();
}

std::string format_rep_series(const RepSeries& s) {
    std::ostringstream os;
    for (long n = 0; n <= s.order(); ++n) {
        os << "t^" << n << ":";
        const auto& comps = s.coeff(n).components();
        if (comps.empty()) {
            os << " 0";
        } else {
            for (const auto& [d, f] : comps) {
                os << " [d=" << d << "] " << format_decomposition(f);
            }
        }
        if (n < s.order()) os << "\n";
    }
    return os.str();
}

std::string format_eigenvalues(const std::vector<long>& multiset, long order) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (long j = 0; j < static_cast<long>(multiset.size()); ++j) {
        for (long k = 0; k < multiset[j]; ++k) {
            if (!first) os << ", ";
            if (j == 0) os << "1";
            else if (order == 2) os << "-1";
            else {
                os << "zeta" << order;
                if (j > 1) os << "^" << j;
            }
            first = false;
        }
    }
    os << "}";
    return os.str();
}

}  // namespace equigen
