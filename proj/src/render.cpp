#include "cellres/render.hpp"

#include <sstream>

namespace cellres {

std::string render_monomial(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* name, int index, std::int64_t e) {
        if (e == 0) return;
        if (!first) os << "*";
        first = false;
        os << name << index;
        if (e != 1) os << "^" << e;
    };
    for (int i = 1; i <= m.ambient().m; ++i) emit("X", i, m.x_exponent(i));
    for (int j = 1; j <= m.ambient().n; ++j) emit("Y", j, m.y_exponent(j));
    if (first) return "1";
    return os.str();
}

std::string render_sum(const MonomialSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : s.terms()) {
        std::int64_t c = coeff;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) {
            os << a;
            if (!mono.is_one()) os << "*";
            else continue;
        }
        os << render_monomial(mono);
    }
    return os.str();
}

namespace {

bool single_digits(const std::vector<int>& v) {
    for (int x : v)
        if (x > 9) return false;
    return true;
}

std::string digits_or_list(const std::vector<int>& v, bool digits) {
    std::ostringstream os;
    if (digits) {
        for (int x : v) os << x;
    } else {
        os << "{";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) os << ",";
            os << v[k];
        }
        os << "}";
    }
    return os.str();
}

}  // namespace

std::string render_face(const Face& f) {
    bool digits = single_digits(f.a) && single_digits(f.b);
    return "[" + digits_or_list(f.a, digits) + "," + digits_or_list(f.b, digits) + "]";
}

std::string render_subset(const std::vector<int>& subset) {
    return "[" + digits_or_list(subset, single_digits(subset)) + "]";
}

std::string render_tag(const BasisTag& tag) {
    switch (tag.kind) {
        case TagKind::Unit:
            return "[]";
        case TagKind::Cell:
            return render_face(tag.face);
        case TagKind::Subset:
            return render_subset(tag.subset);
        case TagKind::ConeCell:
            return "U:" + render_face(tag.face);
        case TagKind::ConeTaylor:
            return "T:" + render_subset(tag.subset);
        case TagKind::ConeShift:
            return "W:" + render_face(tag.face);
    }
    return "?";
}

std::string matrix_text(const MonomialMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << " ";
            os << render_sum(m.at(r, c));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace cellres
