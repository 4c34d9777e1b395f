// catalog.hpp: line lists: CSV ingestion, bundled tables, rotational helper.
//
// Line-list CSV (UTF-8, comma separated, '#' starts a comment line):
//
//   species,branch,omega_ge_cm1,gamma_cm1,strength
//   35Cl2,R59 v2-9,1.312e4,0.01,1
//
// species and branch must not contain commas or double quotes; the pair
// species/branch is the line label and must be unique within a catalog.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eitspec/lineshape.hpp"
#include "eitspec/units.hpp"

namespace eitspec {

inline constexpr std::string_view linelist_header = "species,branch,omega_ge_cm1,gamma_cm1,strength";

struct LineCatalog {
    std::vector<SpectralLine> lines;
    std::string source;
    std::string units_note{"cm^-1"};

    std::size_t size() const { return lines.size(); }
    bool empty() const { return lines.empty(); }
    const SpectralLine* find(std::string_view label) const;
};

// Throws ParseError naming the offending row (1-based file line) and column.
LineCatalog parse_linelist(std::string_view text, std::string source = "<memory>");

// Header plus one row per line, numbers at 17 significant digits.
std::string serialize_linelist(const LineCatalog& cat);

// Names of the catalogs compiled into the library, without extension.
std::vector<std::string> bundled_catalog_names();

bool is_bundled_catalog(std::string_view name);

// Accepts "cl2_table1" or "cl2_table1.csv". Throws ParseError if unknown.
LineCatalog bundled_catalog(std::string_view name);

// A bundled name, or else a file path (relative paths resolved against base_dir).
LineCatalog load_catalog(std::string_view source, const std::filesystem::path& base_dir = {});

// Lines with |omega_ge - center| <= halfwidth, order preserved.
// Throws DomainError unless halfwidth > 0.
LineCatalog select_window(const LineCatalog& cat, Wavenumber center, Wavenumber halfwidth);

struct RotorConstants {
    Wavenumber b_v{};           // rotational constant of the vibrational level, > 0
    Wavenumber const_offset{};
};

// B_v J(J+1) + const. Throws DomainError for J < 0 or B_v <= 0.
Wavenumber rotational_energy(const RotorConstants& rc, int j);

// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace eitspec
