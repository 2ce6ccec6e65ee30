#pragma once

#include <string>

#include <json.hpp>

#include "svtab/tableau.hpp"

namespace svtab {

using Json = nlohmann::ordered_json;

/// {"outer":[...],"inner":[...],"rows":[[[ints]...]...]}, rows row-major
/// with sorted cell lists.
Json tableau_to_json(const SetValuedTableau& t);
/// Missing "outer" means a straight shape read off the row lengths; missing
/// "inner" means empty. Malformed documents raise ParseError.
SetValuedTableau tableau_from_json(const Json& j);
SetValuedTableau parse_tableau(const std::string& text);

}  // namespace svtab
