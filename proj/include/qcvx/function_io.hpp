#pragma once

#include <filesystem>

#include "json.hpp"
#include "qcvx/function_model.hpp"

namespace qcvx {

using Json = nlohmann::ordered_json;

// Function files are JSON objects with a "type" discriminator:
//   {"type":"piecewise_linear","domain":["0","1"],"knots":[["0","0"],["1/2","1"],["1","0"]]}
//   {"type":"piecewise_constant","breaks":[...],"piece_values":[...],"point_values":[...]}
//   {"type":"cantor","depth":6,"mode":"complement"}
//   {"type":"tabulated","positions":[...],"values":[...]}
// Numbers are rational strings; values may also be "inf" or "-inf".
// Parse errors name the offending field, e.g. "knots[2][1]".

Function1D function_from_json(const Json& doc);
Json function_to_json(const Function1D& f);
Function1D load_function_file(const std::filesystem::path& path);
Json load_json_file(const std::filesystem::path& path);

}  // namespace qcvx
