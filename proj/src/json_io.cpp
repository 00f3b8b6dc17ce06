#include "corrkit/json_io.hpp"

namespace corrkit {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer()) throw ParseError(path + "." + key, "expected an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_array()) throw ParseError(path + "." + key, "expected an array");
  return v;
}

std::vector<int> int_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw ParseError(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

void check_issues(const ValidationReport& rep, const std::string& path) {
  if (!rep.ok()) throw ParseError(path, rep.issues.front());
}

}  // namespace

std::string canonical(const Json& j) { return j.dump(); }

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("$", e.what());
  }
}

// ---- serialization --------------------------------------------------------

Json to_json(const SimplexRef& r) { return Json{{"cell", r.cell}, {"word", r.word}}; }

Json to_json(const SimplicialSet& X) {
  Json cells = Json::array();
  for (CellId c = 0; c < static_cast<CellId>(X.num_cells()); ++c) {
    Json faces = Json::array();
    for (const SimplexRef& f : X.cell(c).faces) faces.push_back(to_json(f));
    cells.push_back(
        Json{{"dim", X.cell(c).dim}, {"faces", faces}, {"label", X.cell(c).label}});
  }
  return Json{{"cells", cells}};
}

Json to_json(const SimplicialMap& f) {
  Json assignment = Json::array();
  for (const SimplexRef& r : f.assignment) assignment.push_back(to_json(r));
  return Json{{"source", to_json(*f.source)},
              {"target", to_json(*f.target)},
              {"assignment", assignment}};
}

Json to_json(const FiniteCategory& C) {
  Json arrows = Json::array();
  for (const CatArrow& a : C.arrows)
    arrows.push_back(Json{{"src", a.src}, {"tgt", a.tgt}, {"label", a.label}});
  Json comp = Json::array();
  for (const auto& [key, r] : C.comp) comp.push_back(Json::array({key.first, key.second, r}));
  return Json{{"objects", C.num_objects}, {"arrows", arrows}, {"ids", C.ids}, {"comp", comp}};
}

Json to_json(const FunctorData& F) {
  return Json{{"source", to_json(*F.source)},
              {"target", to_json(*F.target)},
              {"obj", F.obj},
              {"arr", F.arr}};
}

Json to_json(const Profunctor& u) {
  Json elements = Json::array();
  for (const auto& e : u.elems) elements.push_back(Json{{"c", e.c}, {"d", e.d}});
  Json lact = Json::array(), ract = Json::array();
  for (const auto& [key, r] : u.lact) lact.push_back(Json::array({key.first, key.second, r}));
  for (const auto& [key, r] : u.ract) ract.push_back(Json::array({key.first, key.second, r}));
  return Json{{"src", to_json(*u.src)},
              {"tgt", to_json(*u.tgt)},
              {"elements", elements},
              {"lact", lact},
              {"ract", ract}};
}

Json to_json(const CatDiagram& D) {
  Json at = Json::array(), on = Json::array();
  for (const CatPtr& c : D.at) at.push_back(to_json(*c));
  for (const FunctorData& F : D.on) on.push_back(Json{{"obj", F.obj}, {"arr", F.arr}});
  return Json{{"base", to_json(*D.base)}, {"at", at}, {"on", on}};
}

// ---- parsing --------------------------------------------------------------

SimplexRef ref_from_json(const Json& j, const std::string& path) {
  SimplexRef r;
  int cell = int_field(j, "cell", path);
  if (cell < 0) throw ParseError(path + ".cell", "negative cell id");
  r.cell = static_cast<CellId>(cell);
  r.word = int_vector(array_field(j, "word", path), path + ".word");
  return r;
}

SsetPtr sset_from_json(const Json& j, const std::string& path) {
  const Json& cells = array_field(j, "cells", path);
  auto X = std::make_shared<SimplicialSet>();
  for (size_t c = 0; c < cells.size(); ++c) {
    std::string cpath = path + ".cells[" + std::to_string(c) + "]";
    int dim = int_field(cells[c], "dim", cpath);
    if (dim < 0) throw ParseError(cpath + ".dim", "negative dimension");
    const Json& faces = array_field(cells[c], "faces", cpath);
    if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1))
      throw ParseError(cpath + ".faces", "cell " + std::to_string(c) + " of dimension " +
                                             std::to_string(dim) + " needs " +
                                             std::to_string(dim == 0 ? 0 : dim + 1) +
                                             " faces, got " + std::to_string(faces.size()));
    std::vector<SimplexRef> fs;
    for (size_t i = 0; i < faces.size(); ++i)
      fs.push_back(ref_from_json(faces[i], cpath + ".faces[" + std::to_string(i) + "]"));
    std::string label = cells[c].contains("label") ? cells[c]["label"].get<std::string>() : "";
    X->add_cell(dim, std::move(fs), std::move(label));
  }
  check_issues(validate_sset(*X), path);
  return X;
}

SimplicialMap map_from_json(const Json& j, const std::string& path) {
  SimplicialMap f;
  f.source = sset_from_json(field(j, "source", path), path + ".source");
  f.target = sset_from_json(field(j, "target", path), path + ".target");
  const Json& assignment = array_field(j, "assignment", path);
  if (static_cast<int>(assignment.size()) != f.source->num_cells())
    throw ParseError(path + ".assignment", "expected one entry per source cell");
  for (size_t i = 0; i < assignment.size(); ++i)
    f.assignment.push_back(
        ref_from_json(assignment[i], path + ".assignment[" + std::to_string(i) + "]"));
  check_issues(validate_map(f), path);
  return f;
}

CatPtr cat_from_json(const Json& j, const std::string& path) {
  auto C = std::make_shared<FiniteCategory>();
  C->num_objects = int_field(j, "objects", path);
  const Json& arrows = array_field(j, "arrows", path);
  for (size_t a = 0; a < arrows.size(); ++a) {
    std::string apath = path + ".arrows[" + std::to_string(a) + "]";
    CatArrow ar;
    ar.src = int_field(arrows[a], "src", apath);
    ar.tgt = int_field(arrows[a], "tgt", apath);
    if (arrows[a].contains("label")) ar.label = arrows[a]["label"].get<std::string>();
    C->arrows.push_back(std::move(ar));
  }
  C->ids = int_vector(array_field(j, "ids", path), path + ".ids");
  const Json& comp = array_field(j, "comp", path);
  for (size_t t = 0; t < comp.size(); ++t) {
    std::vector<int> row = int_vector(comp[t], path + ".comp[" + std::to_string(t) + "]");
    if (row.size() != 3)
      throw ParseError(path + ".comp[" + std::to_string(t) + "]", "expected [g, f, gf]");
    C->comp[{row[0], row[1]}] = row[2];
  }
  check_issues(validate_cat(*C), path);
  return C;
}

FunctorData functor_from_json(const Json& j, const std::string& path) {
  FunctorData F;
  F.source = cat_from_json(field(j, "source", path), path + ".source");
  F.target = cat_from_json(field(j, "target", path), path + ".target");
  F.obj = int_vector(array_field(j, "obj", path), path + ".obj");
  F.arr = int_vector(array_field(j, "arr", path), path + ".arr");
  check_issues(validate_functor(F), path);
  return F;
}

Profunctor prof_from_json(const Json& j, const std::string& path) {
  Profunctor u;
  u.src = cat_from_json(field(j, "src", path), path + ".src");
  u.tgt = cat_from_json(field(j, "tgt", path), path + ".tgt");
  const Json& elements = array_field(j, "elements", path);
  for (size_t e = 0; e < elements.size(); ++e) {
    std::string epath = path + ".elements[" + std::to_string(e) + "]";
    int c = int_field(elements[e], "c", epath), d = int_field(elements[e], "d", epath);
    u.elems.push_back({c, d});
    u.at[{c, d}].push_back(static_cast<int>(e));
  }
  auto read_action = [&](const char* key, std::map<std::pair<int, int>, int>& table) {
    const Json& rows = array_field(j, key, path);
    for (size_t t = 0; t < rows.size(); ++t) {
      std::string rpath = path + "." + key + "[" + std::to_string(t) + "]";
      std::vector<int> row = int_vector(rows[t], rpath);
      if (row.size() != 3) throw ParseError(rpath, "expected [arrow, elem, elem']");
      table[{row[0], row[1]}] = row[2];
    }
  };
  read_action("lact", u.lact);
  read_action("ract", u.ract);
  check_issues(validate_prof(u), path);
  return u;
}

CatDiagram cat_diagram_from_json(const Json& j, const std::string& path) {
  CatDiagram D;
  D.base = cat_from_json(field(j, "base", path), path + ".base");
  const Json& at = array_field(j, "at", path);
  for (size_t a = 0; a < at.size(); ++a)
    D.at.push_back(cat_from_json(at[a], path + ".at[" + std::to_string(a) + "]"));
  const Json& on = array_field(j, "on", path);
  for (size_t f = 0; f < on.size(); ++f) {
    std::string fpath = path + ".on[" + std::to_string(f) + "]";
    if (f >= static_cast<size_t>(D.base->num_arrows()))
      throw ParseError(fpath, "more functors than base arrows");
    FunctorData F;
    const CatArrow& af = D.base->arrows[f];
    F.source = D.at[static_cast<size_t>(af.src)];
    F.target = D.at[static_cast<size_t>(af.tgt)];
    F.obj = int_vector(array_field(on[f], "obj", fpath), fpath + ".obj");
    F.arr = int_vector(array_field(on[f], "arr", fpath), fpath + ".arr");
    D.on.push_back(std::move(F));
  }
  check_issues(validate_cat_diagram(D), path);
  return D;
}

Json wrap(const std::string& kind, const Json& value) {
  return Json{{"kind", kind}, {"value", value}};
}

std::pair<std::string, Json> unwrap(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) throw ParseError(path + ".kind", "expected a string");
  return {kind.get<std::string>(), field(j, "value", path)};
}

}  // namespace corrkit
