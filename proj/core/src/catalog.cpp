#include "eitspec/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "bundled_data.hpp"
#include "eitspec/csv.hpp"
#include "eitspec/errors.hpp"

namespace eitspec {

namespace {

constexpr std::array<std::string_view, 5> columns = {"species", "branch", "omega_ge_cm1", "gamma_cm1",
                                                     "strength"};

[[noreturn]] void fail(const std::string& source, std::size_t row, std::string_view column,
                       const std::string& what) {
    std::ostringstream os;
    os << source << ": row " << row;
    if (!column.empty()) os << ", column '" << column << "'";
    os << ": " << what;
    throw ParseError(os.str());
}

bool is_comment_or_blank(std::string_view line) {
    const auto t = csv::trim(line);
    return t.empty() || t.front() == '#';
}

std::string_view strip_extension(std::string_view name) {
    if (name.size() > 4 && name.substr(name.size() - 4) == ".csv") name.remove_suffix(4);
    return name;
}

}  // namespace

const SpectralLine* LineCatalog::find(std::string_view label) const {
    auto it = std::find_if(lines.begin(), lines.end(), [&](const SpectralLine& l) { return l.label() == label; });
    return it == lines.end() ? nullptr : &*it;
}

LineCatalog parse_linelist(std::string_view text, std::string source) {
    LineCatalog cat;
    cat.source = std::move(source);
    const auto rows = csv::split_lines(text);

    bool have_header = false;
    std::set<std::string> labels;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t row = i + 1;
        const std::string& line = rows[i];
        if (is_comment_or_blank(line)) continue;

        const auto fields = csv::split_row(line);
        if (!have_header) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                if (c >= fields.size()) fail(cat.source, row, columns[c], "missing column in header");
                if (csv::trim(fields[c]) != columns[c]) {
                    fail(cat.source, row, columns[c], "header must be exactly '" + std::string(linelist_header) + "'");
                }
            }
            if (fields.size() != columns.size()) fail(cat.source, row, {}, "unexpected extra header columns");
            have_header = true;
            continue;
        }

        if (fields.size() < columns.size()) fail(cat.source, row, columns[fields.size()], "missing column");
        if (fields.size() > columns.size()) fail(cat.source, row, {}, "too many columns");

        SpectralLine l;
        l.species = std::string(csv::trim(fields[0]));
        l.branch = std::string(csv::trim(fields[1]));
        if (l.species.empty()) fail(cat.source, row, columns[0], "empty species");
        if (l.branch.empty()) fail(cat.source, row, columns[1], "empty branch");
        if (l.species.find('"') != std::string::npos) fail(cat.source, row, columns[0], "quotes are not allowed");
        if (l.branch.find('"') != std::string::npos) fail(cat.source, row, columns[1], "quotes are not allowed");

        std::array<double, 3> num{};
        for (std::size_t c = 2; c < 5; ++c) {
            const auto v = csv::parse_real(fields[c]);
            if (!v || !std::isfinite(*v)) {
                fail(cat.source, row, columns[c], "not a finite number: '" + fields[c] + "'");
            }
            num[c - 2] = *v;
        }
        l.omega_ge = Wavenumber{num[0]};
        l.gamma = Wavenumber{num[1]};
        l.strength = num[2];
        if (!(l.gamma.cm1 > 0.0)) fail(cat.source, row, columns[3], "line width must be > 0");
        if (l.strength < 0.0) fail(cat.source, row, columns[4], "strength must be >= 0");
        if (!labels.insert(l.label()).second) fail(cat.source, row, {}, "duplicate line label '" + l.label() + "'");
        cat.lines.push_back(std::move(l));
    }
    if (!have_header) fail(cat.source, rows.size(), {}, "missing header '" + std::string(linelist_header) + "'");
    return cat;
}

std::string serialize_linelist(const LineCatalog& cat) {
    std::string out(linelist_header);
    out += '\n';
    for (const auto& l : cat.lines) {
        out += l.species + ',' + l.branch + ',' + csv::format_real(l.omega_ge.cm1) + ',' +
               csv::format_real(l.gamma.cm1) + ',' + csv::format_real(l.strength) + '\n';
    }
    return out;
}

std::vector<std::string> bundled_catalog_names() {
    std::vector<std::string> names;
    for (const auto& f : detail::bundled_files()) {
        if (f.kind == "catalogs") names.emplace_back(strip_extension(f.name));
    }
    std::sort(names.begin(), names.end());
    return names;
}

bool is_bundled_catalog(std::string_view name) {
    name = strip_extension(name);
    const auto names = bundled_catalog_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

LineCatalog bundled_catalog(std::string_view name) {
    const auto stem = strip_extension(name);
    for (const auto& f : detail::bundled_files()) {
        if (f.kind == "catalogs" && strip_extension(f.name) == stem) {
            return parse_linelist(f.content, "bundled:" + std::string(f.name));
        }
    }
    std::string known;
    for (const auto& n : bundled_catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw ParseError("unknown bundled catalog '" + std::string(name) + "' (available: " + known + ")");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LineCatalog load_catalog(std::string_view source, const std::filesystem::path& base_dir) {
    if (is_bundled_catalog(source)) return bundled_catalog(source);
    std::filesystem::path p(source);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return parse_linelist(read_text_file(p), p.string());
}

LineCatalog select_window(const LineCatalog& cat, Wavenumber center, Wavenumber halfwidth) {
    if (!(halfwidth.cm1 > 0.0)) throw DomainError("window halfwidth must be > 0");
    LineCatalog out;
    out.source = cat.source;
    out.units_note = cat.units_note;
    std::copy_if(cat.lines.begin(), cat.lines.end(), std::back_inserter(out.lines), [&](const SpectralLine& l) {
        return std::abs(l.omega_ge.cm1 - center.cm1) <= halfwidth.cm1;
    });
    return out;
}

Wavenumber rotational_energy(const RotorConstants& rc, int j) {
    if (j < 0) throw DomainError("rotational quantum number J must be >= 0");
    if (!(rc.b_v.cm1 > 0.0)) throw DomainError("rotational constant B_v must be > 0");
    const double jj = static_cast<double>(j);
    return Wavenumber{rc.b_v.cm1 * jj * (jj + 1.0) + rc.const_offset.cm1};
}

}  // namespace eitspec
