#include "svtab/path.hpp"

#include "svtab/error.hpp"

namespace svtab {

char step_char(Step s) {
  switch (s) {
    case Step::U: return 'U';
    case Step::D: return 'D';
    case Step::u: return 'u';
    case Step::d: return 'd';
  }
  return '?';
}

ColoredPath::ColoredPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == Step::U) ++height;
    if (steps_[i] == Step::D && --height < 0) {
      throw Error(Errc::InvalidArgument,
                  "path goes below the axis at step " + std::to_string(i + 1));
    }
  }
}

ColoredPath ColoredPath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    switch (ch) {
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      case 'u': steps.push_back(Step::u); break;
      case 'd': steps.push_back(Step::d); break;
      default: throw Error(Errc::ParseError, std::string("unknown step '") + ch + "'");
    }
  }
  return ColoredPath(std::move(steps));
}

int ColoredPath::final_height() const { return count(Step::U) - count(Step::D); }

int ColoredPath::count(Step s) const {
  int n = 0;
  for (Step x : steps_) n += (x == s);
  return n;
}

std::string ColoredPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += step_char(s);
  return out;
}

std::string_view family_name(PathFamily f) {
  switch (f) {
    case PathFamily::motz: return "motz";
    case PathFamily::motzE: return "motzE";
    case PathFamily::motzT: return "motzT";
    case PathFamily::motzET: return "motzET";
    case PathFamily::ballotlike: return "ballotlike";
  }
  return "?";
}

PathFamily parse_family(std::string_view name) {
  for (PathFamily f : {PathFamily::motz, PathFamily::motzE, PathFamily::motzT, PathFamily::motzET,
                       PathFamily::ballotlike}) {
    if (family_name(f) == name) return f;
  }
  throw Error(Errc::ParseError, "unknown path family '" + std::string(name) + "'");
}

std::string FamilyTags::to_string() const {
  std::string out = "{";
  bool first = true;
  for (PathFamily f : {PathFamily::motz, PathFamily::motzE, PathFamily::motzT, PathFamily::motzET,
                       PathFamily::ballotlike}) {
    if (!has(f)) continue;
    if (!first) out += ", ";
    out += family_name(f);
    first = false;
  }
  return out + "}";
}

bool no_umber_on_axis(const ColoredPath& p) {
  int height = 0;
  for (Step s : p.steps()) {
    if (s == Step::u && height == 0) return false;
    if (s == Step::U) ++height;
    if (s == Step::D) --height;
  }
  return true;
}

bool no_denim_before_first_down(const ColoredPath& p) {
  for (Step s : p.steps()) {
    if (s == Step::D) return true;
    if (s == Step::d) return false;
  }
  return true;
}

FamilyTags path_family(const ColoredPath& p) {
  FamilyTags tags;
  const bool r1 = no_umber_on_axis(p);
  const bool r2 = no_denim_before_first_down(p);
  if (r1 && r2) tags.set(PathFamily::ballotlike);
  if (p.final_height() == 0) {
    tags.set(PathFamily::motz);
    if (r1) tags.set(PathFamily::motzE);
    if (r2) tags.set(PathFamily::motzT);
    if (r1 && r2) tags.set(PathFamily::motzET);
  }
  return tags;
}

bool in_family(const ColoredPath& p, PathFamily f) { return path_family(p).has(f); }

}  // namespace svtab
