#include "niemeier/fourier.hpp"

#include <algorithm>

namespace niemeier {

FourierExpansion::FourierExpansion(int degree, Rational weight) : degree_(degree), weight_(std::move(weight)) {
    if (degree < 0 || degree > IndexMatrix::kMaxDegree) {
        throw std::invalid_argument("FourierExpansion: degree must be in 0..3");
    }
}

void FourierExpansion::set(const IndexMatrix& t, Rational value) {
    if (t.degree() != degree_) {
        throw std::invalid_argument("FourierExpansion::set: index of degree " + std::to_string(t.degree()) +
                                    " in an expansion of degree " + std::to_string(degree_));
    }
    if (!t.is_psd()) {
        throw std::invalid_argument("FourierExpansion::set: " + t.bracket_string() + " is not positive semidefinite");
    }
    coeffs_[t] = std::move(value);
}

const Rational& FourierExpansion::at(const IndexMatrix& t) const {
    const auto it = coeffs_.find(t);
    if (it == coeffs_.end()) {
        throw CoverageError("coefficient at " + t.bracket_string() + " is outside the computed box");
    }
    return it->second;
}

Box FourierExpansion::box() const {
    Box out;
    out.reserve(coeffs_.size());
    for (const auto& [t, v] : coeffs_) {
        out.push_back(t);
    }
    return out;
}

FourierExpansion FourierExpansion::restricted(const Box& box) const {
    FourierExpansion out(degree_, weight_);
    for (const auto& t : box) {
        out.coeffs_[t] = at(t);
    }
    return out;
}

bool FourierExpansion::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_integer(); });
}

namespace {

void check_compatible(const FourierExpansion& a, const FourierExpansion& b) {
    if (a.degree() != b.degree()) {
        throw std::invalid_argument("FourierExpansion: degree mismatch");
    }
}

} // namespace

FourierExpansion operator+(const FourierExpansion& a, const FourierExpansion& b) {
    check_compatible(a, b);
    FourierExpansion out(a.degree_, a.weight_);
    for (const auto& [t, v] : a.coeffs_) {
        out.coeffs_[t] = v + b.at(t);
    }
    return out;
}

FourierExpansion operator-(const FourierExpansion& a, const FourierExpansion& b) {
    check_compatible(a, b);
    FourierExpansion out(a.degree_, a.weight_);
    for (const auto& [t, v] : a.coeffs_) {
        out.coeffs_[t] = v - b.at(t);
    }
    return out;
}

FourierExpansion operator*(const Rational& c, const FourierExpansion& f) {
    FourierExpansion out(f.degree_, f.weight_);
    for (const auto& [t, v] : f.coeffs_) {
        out.coeffs_[t] = c * v;
    }
    return out;
}

std::int64_t sturm_bound(int degree, std::int64_t weight) {
    // (4/3)^n k / 16 = 4^n k / (3^n 16)
    std::int64_t num = weight;
    std::int64_t den = 16;
    for (int i = 0; i < degree; ++i) {
        num *= 4;
        den *= 3;
    }
    return num >= 0 ? num / den : -((-num + den - 1) / den);
}

Box sturm_box(int degree, std::int64_t weight) { return diagonal_box(degree, std::max<std::int64_t>(0, sturm_bound(degree, weight))); }

Box down_closure(const Box& box) {
    if (box.empty()) {
        return {};
    }
    const int n = box.front().degree();
    std::vector<std::int64_t> bounds(static_cast<std::size_t>(n), 0);
    for (const auto& t : box) {
        for (int i = 0; i < n; ++i) {
            bounds[static_cast<std::size_t>(i)] = std::max(bounds[static_cast<std::size_t>(i)], t.t(i));
        }
    }
    return diagonal_box(bounds);
}

FourierExpansion siegel_operator(const FourierExpansion& f) {
    if (f.degree() < 1) {
        throw std::invalid_argument("siegel_operator: degree must be at least 1");
    }
    FourierExpansion out(f.degree() - 1, f.weight());
    for (const auto& [t, v] : f.coefficients()) {
        if (t.last_row_zero()) {
            out.set(t.truncated(), v);
        }
    }
    return out;
}

FourierExpansion theta_operator(const FourierExpansion& f) {
    FourierExpansion out(f.degree(), f.weight());
    for (const auto& [t, v] : f.coefficients()) {
        out.set(t, v * t.det());
    }
    return out;
}

namespace {

// All T1 with T1 >= 0 and T - T1 >= 0.
void for_each_split(const IndexMatrix& t, const auto& visit) {
    const int n = t.degree();
    if (n == 0) {
        visit(t);
        return;
    }
    std::vector<std::int64_t> diag(static_cast<std::size_t>(n), 0);
    while (true) {
        for (const auto& t1 : psd_with_diagonal(diag)) {
            if ((t - t1).is_psd()) {
                visit(t1);
            }
        }
        int i = 0;
        while (i < n && diag[static_cast<std::size_t>(i)] == t.t(i)) {
            diag[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
        ++diag[static_cast<std::size_t>(i)];
    }
}

} // namespace

FourierExpansion multiply(const FourierExpansion& f, const FourierExpansion& g, const Box& box) {
    check_compatible(f, g);
    FourierExpansion out(f.degree(), f.weight() + g.weight());
    for (const auto& t : box) {
        Rational acc;
        for_each_split(t, [&](const IndexMatrix& t1) {
            const Rational& a = f.at(t1);
            if (a.is_zero()) {
                return;
            }
            acc += a * g.at(t - t1);
        });
        out.set(t, std::move(acc));
    }
    return out;
}

std::vector<ResidueMismatch> congruent_mod(const FourierExpansion& f, const FourierExpansion& g, std::int64_t m,
                                           const Box& box) {
    if (m < 1) {
        throw std::invalid_argument("congruent_mod: modulus must be positive");
    }
    std::vector<ResidueMismatch> out;
    for (const auto& t : box) {
        const std::int64_t a = residue_mod(f.at(t), m);
        const std::int64_t b = residue_mod(g.at(t), m);
        if (a != b) {
            out.push_back({t, a, b});
        }
    }
    return out;
}

Rational diagonal_restriction_coeff(const FourierExpansion& f, std::span<const std::int64_t> diagonal) {
    if (static_cast<int>(diagonal.size()) != f.degree()) {
        throw std::invalid_argument("diagonal_restriction_coeff: diagonal length does not match the degree");
    }
    Rational acc;
    for (const auto& t : psd_with_diagonal(diagonal)) {
        acc += f.at(t);
    }
    return acc;
}

nlohmann::json rational_part_json(const BigInt& value) {
    if (value.fits_slong_p()) {
        return static_cast<std::int64_t>(value.get_si());
    }
    return value.get_str();
}

namespace {

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        return BigInt(j.get<std::string>());
    }
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
}

} // namespace

nlohmann::json to_json(const FourierExpansion& f) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [t, v] : f.coefficients()) {
        entries.push_back({{"T", t.encoding()}, {"num", rational_part_json(v.num())}, {"den", rational_part_json(v.den())}});
    }
    nlohmann::json weight;
    if (f.weight().is_integer()) {
        weight = rational_part_json(f.weight().num());
    } else {
        weight = f.weight().to_string();
    }
    return {{"degree", f.degree()}, {"weight", weight}, {"entries", entries}};
}

FourierExpansion expansion_from_json(const nlohmann::json& j) {
    const int degree = j.at("degree").get<int>();
    const auto& w = j.at("weight");
    const Rational weight = w.is_string() ? Rational::parse(w.get<std::string>()) : Rational(static_cast<long>(w.get<std::int64_t>()));
    FourierExpansion f(degree, weight);
    for (const auto& e : j.at("entries")) {
        const auto enc = e.at("T").get<std::vector<std::int64_t>>();
        f.set(IndexMatrix::from_encoding(degree, enc), Rational(bigint_from_json(e.at("num")), bigint_from_json(e.at("den"))));
    }
    return f;
}

} // namespace niemeier
