#pragma once

#include <string_view>
#include <vector>

namespace eitspec::detail {

struct BundledFile {
    std::string_view kind;  // "catalogs" or "scenarios"
    std::string_view name;  // file name including extension
    std::string_view content;
};

const std::vector<BundledFile>& bundled_files();

}  // namespace eitspec::detail
