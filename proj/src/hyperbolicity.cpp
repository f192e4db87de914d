#include "anloc/hyperbolicity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "anloc/errors.hpp"
#include "anloc/euler.hpp"

namespace anloc::hyperbolicity {

namespace {

Integer z(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Cached per n; the volume sum is the only non-trivial part.
Rational cubic_chi1(std::int64_t n) {
    static std::mutex mu;
    static std::map<std::int64_t, Rational> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, euler::chi1_cubic_coefficient(n)).first;
    return it->second;
}

}  // namespace

Integer k_squared(std::int64_t d) { return z(d) * (z(d) - 4) * (z(d) - 4); }

Integer c2(std::int64_t d) { return z(d) * z(d) * z(d) - 4 * z(d) * z(d) + 6 * z(d); }

Rational chi_o(std::int64_t d) { return Rational(k_squared(d) + c2(d)) / 12; }

Integer chi_smooth(std::int64_t d, std::int64_t m) {
    if (d < 1) throw DomainError("degree must be positive");
    if (m < 0) throw DomainError("m must be non-negative");
    const Rational k2(k_squared(d)), c(c2(d)), mm(static_cast<long>(m));
    const Rational val = (k2 - 2 * c) * mm * (mm + 1) * (2 * mm + 1) / 6 + c * mm * (mm + 1) * (mm - 1) / 3 -
                         k2 * mm * (mm + 1) / 2;
    const Rational out = val / 2 + (mm + 1) * chi_o(d);
    if (!is_integer(out)) throw VerificationError("chi_smooth is not an integer: " + to_string(out));
    return out.get_num();
}

Rational chi_smooth_cubic(std::int64_t d) { return -make_rational(2 * d * d - 5 * d, 3); }

void check_profile(const SurfaceProfile& p) {
    if (p.d < 5) throw DomainError("degree " + std::to_string(p.d) + " < 5: surface need not be of general type");
    if (p.n < 1) throw DomainError("singularity index must be positive");
    if (p.r < 0) throw DomainError("singularity count must be non-negative");
}

Integer h0_lower_bound(const SurfaceProfile& p, std::int64_t m) {
    check_profile(p);
    if (m < 3) throw DomainError("the lower bound holds for m >= 3, got m = " + std::to_string(m));
    return chi_smooth(p.d, m) + z(p.r) * z(euler::chi1(p.n, m));
}

Rational h0_cubic_coefficient(const SurfaceProfile& p) {
    check_profile(p);
    return chi_smooth_cubic(p.d) + Rational(static_cast<long>(p.r)) * cubic_chi1(p.n);
}

std::int64_t r_min(std::int64_t d, std::int64_t n) {
    check_profile({d, n, 0});
    const Rational l = cubic_chi1(n);
    if (l <= 0) throw VerificationError("chi1 cubic coefficient is not positive for n = " + std::to_string(n));
    return to_int64(floor(-chi_smooth_cubic(d) / l)) + 1;
}

std::int64_t miyaoka_max(std::int64_t d, std::int64_t n) {
    if (d < 1) throw DomainError("degree must be positive");
    if (n < 1) throw DomainError("singularity index must be positive");
    const Rational bound = make_rational(2 * z(d - 1) * z(d - 1) * z(d) * z(n + 1), 3 * z(2 * n + 1));
    return to_int64(floor(bound));
}

LabsVerdict labs_check(std::int64_t k) {
    if (k < 3) throw DomainError("k = " + std::to_string(k) + " gives degree " + std::to_string(2 * k) + " < 5");
    LabsVerdict v{k, 2 * k, k - 1, 4 * k * k, 0, false};
    v.required = r_min(v.d, v.n);
    v.verdict = v.available >= v.required;
    return v;
}

const RdnCell& RdnTable::at(std::int64_t d, std::int64_t n) const {
    if (d < 5 || d > d_max || n < 1 || n > n_max) throw DomainError("cell outside the table");
    return cells.at(static_cast<std::size_t>((d - 5) * n_max + (n - 1)));
}

RdnTable rdn_table(std::int64_t d_max, std::int64_t n_max) {
    if (d_max < 5 || n_max < 1) throw DomainError("table needs d_max >= 5 and n_max >= 1");
    RdnTable t{d_max, n_max, {}};
    for (std::int64_t d = 5; d <= d_max; ++d) {
        for (std::int64_t n = 1; n <= n_max; ++n) t.cells.push_back({d, n, r_min(d, n), d == 5 && n == 6});
    }
    return t;
}

std::string to_csv(const RdnTable& t) {
    std::ostringstream os;
    os << "d,n,r\n";
    for (const auto& c : t.cells) os << c.d << ',' << c.n << ',' << c.r << '\n';
    for (const auto& c : t.cells)
        if (c.flagged) os << "# " << c.d << ',' << c.n << ": " << kFlagNote << '\n';
    return os.str();
}

namespace {

std::string cell_text(const RdnCell& c) { return std::to_string(c.r) + (c.flagged ? "*" : ""); }

bool any_flagged(const RdnTable& t) {
    for (const auto& c : t.cells)
        if (c.flagged) return true;
    return false;
}

}  // namespace

std::string to_markdown(const RdnTable& t) {
    std::size_t w = 3;
    for (const auto& c : t.cells) w = std::max(w, cell_text(c).size());
    auto pad = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
    std::ostringstream os;
    os << "| " << pad("d\\n");
    for (std::int64_t n = 1; n <= t.n_max; ++n) os << " | " << pad(std::to_string(n));
    os << " |\n|" << std::string(w + 1, '-') << ':';
    for (std::int64_t n = 1; n <= t.n_max; ++n) os << '|' << std::string(w + 1, '-') << ':';
    os << "|\n";
    for (std::int64_t d = 5; d <= t.d_max; ++d) {
        os << "| " << pad(std::to_string(d));
        for (std::int64_t n = 1; n <= t.n_max; ++n) os << " | " << pad(cell_text(t.at(d, n)));
        os << " |\n";
    }
    if (any_flagged(t)) os << "\n\\* " << kFlagNote << '\n';
    return os.str();
}

std::string to_tex(const RdnTable& t) {
    std::ostringstream os;
    os << "\\begin{tabular}{r|" << std::string(static_cast<std::size_t>(t.n_max), 'r') << "}\n";
    os << "$d\\backslash n$";
    for (std::int64_t n = 1; n <= t.n_max; ++n) os << " & " << n;
    os << " \\\\\n\\hline\n";
    for (std::int64_t d = 5; d <= t.d_max; ++d) {
        os << d;
        for (std::int64_t n = 1; n <= t.n_max; ++n) {
            const auto& c = t.at(d, n);
            os << " & " << c.r << (c.flagged ? "$^*$" : "");
        }
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    if (any_flagged(t)) os << "% $^*$ " << kFlagNote << '\n';
    return os.str();
}

}  // namespace anloc::hyperbolicity
