#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace fsi::oracle::detail {

// Generated at build time from data/fixtures/*.tbl: (file stem, contents).
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixture_texts();

}  // namespace fsi::oracle::detail
