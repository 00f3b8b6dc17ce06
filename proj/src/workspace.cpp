#include "corrkit/workspace.hpp"

namespace corrkit {

namespace {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void validate_by_kind(const std::string& kind, const Json& value) {
  if (kind == "sset")
    sset_from_json(value);
  else if (kind == "map")
    map_from_json(value);
  else if (kind == "category")
    cat_from_json(value);
  else if (kind == "functor")
    functor_from_json(value);
  else if (kind == "profunctor")
    prof_from_json(value);
  else if (kind == "cat-diagram")
    cat_diagram_from_json(value);
  else
    throw ParseError("$", "unknown kind '" + kind + "'");
}

}  // namespace

std::string content_id(const std::string& kind, const Json& value) {
  return fnv1a_hex(canonical(wrap(kind, value)));
}

std::string Workspace::insert(const std::string& kind, const Json& value,
                              const std::string& name) {
  validate_by_kind(kind, value);
  std::string id = content_id(kind, value);
  store_.insert({id, Entry{kind, value}});
  if (!name.empty()) names_[name] = id;
  return id;
}

const Workspace::Entry& Workspace::at(const std::string& id) const { return store_.at(id); }

std::optional<std::string> Workspace::id_of(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

}  // namespace corrkit
