#include "polyprod/complex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyprod {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<Mask> parse_facet_list(const std::string& text) {
  std::vector<Mask> facets;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::vector<int> verts;
    std::stringstream vs(item);
    int v;
    while (vs >> v) verts.push_back(v);
    if (!vs.eof()) throw InputError("bad facet entry: '" + item + "'");
    facets.push_back(mask_of(verts));
  }
  return facets;
}

SimplicialComplex parse_json_complex(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("bad JSON complex: ") + e.what());
  }
  if (!j.contains("m")) throw InputError("JSON complex needs field \"m\"");
  int m = j["m"].get<int>();
  if (j.value("void", false)) return SimplicialComplex::void_complex(m);
  std::vector<Mask> facets;
  for (const auto& f : j.value("facets", nlohmann::json::array()))
    facets.push_back(mask_of(f.get<std::vector<int>>()));
  return SimplicialComplex::from_facets(m, facets);
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '{') return parse_json_complex(t);

  int m = -1;
  bool is_void = false;
  std::vector<Mask> facets;
  bool have_facets = false;
  std::stringstream ss(t);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw InputError("bad complex line: '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "m") {
      m = std::stoi(val);
    } else if (key == "facets") {
      facets = parse_facet_list(val);
      have_facets = true;
    } else if (key == "void") {
      is_void = (val == "true" || val == "1");
    } else {
      throw InputError("unknown complex key: '" + key + "'");
    }
  }
  if (m < 0) throw InputError("complex text needs a line m=<int>");
  if (is_void) {
    if (have_facets && !facets.empty()) throw InputError("void complex cannot carry facets");
    return SimplicialComplex::void_complex(m);
  }
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open complex file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

PairSequence::Pair parse_pair(const std::string& text) {
  // split on "---" or on the first blank line between two non-empty chunks
  std::string first, second;
  size_t sep = text.find("---");
  if (sep != std::string::npos) {
    first = text.substr(0, sep);
    second = text.substr(sep + 3);
  } else {
    std::stringstream ss(text);
    std::string line;
    std::string* target = &first;
    bool seen_content = false;
    while (std::getline(ss, line)) {
      if (trim(line).empty()) {
        if (seen_content && target == &first) {
          target = &second;
          continue;
        }
        continue;
      }
      seen_content = true;
      *target += line + "\n";
    }
  }
  if (trim(second).empty()) throw InputError("pair file needs two complexes (X then A)");
  return {parse_complex(first), parse_complex(second)};
}

PairSequence::Pair load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pair file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pair(buf.str());
}

std::string complex_to_text(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "m=" << k.ground_size() << "\n";
  if (k.is_void()) {
    os << "void=true\n";
    return os.str();
  }
  os << "facets=";
  bool first = true;
  for (Mask f : k.facets()) {
    if (!first) os << ",";
    bool fv = true;
    for (int v : vertices_of(f)) {
      if (!fv) os << " ";
      os << v;
      fv = false;
    }
    first = false;
  }
  os << "\n";
  return os.str();
}

std::string complex_to_json(const SimplicialComplex& k) {
  nlohmann::json j;
  j["m"] = k.ground_size();
  if (k.is_void()) {
    j["void"] = true;
    j["facets"] = nlohmann::json::array();
  } else {
    j["void"] = false;
    nlohmann::json arr = nlohmann::json::array();
    for (Mask f : k.facets()) arr.push_back(vertices_of(f));
    j["facets"] = arr;
  }
  return j.dump();
}

}  // namespace polyprod
