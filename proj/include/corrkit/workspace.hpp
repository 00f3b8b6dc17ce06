#pragma once

#include <optional>

#include "corrkit/json_io.hpp"

namespace corrkit {

// Stable content hash of a wrapped value's canonical serialization.
std::string content_id(const std::string& kind, const Json& value);

// Named, content-addressed store of validated values.  Insertion re-parses
// through the kind's validator, so everything stored is well-formed.
class Workspace {
 public:
  struct Entry {
    std::string kind;
    Json value;
  };

  // Returns the content id; throws ParseError on invalid values or kinds.
  std::string insert(const std::string& kind, const Json& value, const std::string& name = "");
  const Entry& at(const std::string& id) const;
  std::optional<std::string> id_of(const std::string& name) const;
  size_t size() const { return store_.size(); }

 private:
  std::map<std::string, Entry> store_;
  std::map<std::string, std::string> names_;
};

}  // namespace corrkit
