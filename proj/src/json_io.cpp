#include "svtab/json_io.hpp"

#include "svtab/error.hpp"

namespace svtab {

Json tableau_to_json(const SetValuedTableau& t) {
  Json j;
  j["outer"] = t.shape().outer().parts();
  j["inner"] = t.shape().inner().parts();
  j["rows"] = t.rows();
  return j;
}

SetValuedTableau tableau_from_json(const Json& j) {
  TableauRows rows;
  std::vector<int> outer, inner;
  try {
    rows = j.at("rows").get<TableauRows>();
    if (j.contains("outer")) outer = j.at("outer").get<std::vector<int>>();
    if (j.contains("inner")) inner = j.at("inner").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad tableau document: ") + e.what());
  }
  if (!j.contains("outer")) {
    if (!inner.empty()) throw Error(Errc::ParseError, "\"inner\" given without \"outer\"");
    return make_tableau(std::move(rows));
  }
  return validate_svsyt(std::move(rows), SkewShape(Partition(outer), Partition(inner)));
}

SetValuedTableau parse_tableau(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return tableau_from_json(j);
}

}  // namespace svtab
