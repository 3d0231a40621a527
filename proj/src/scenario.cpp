#include "isodec/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "isodec/error.hpp"

namespace isodec {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& why) {
  throw Error(Errc::ParseError, (where.empty() ? std::string("/") : where) + ": " + why);
}

const Json& field(const Json& object, const std::string& key, const std::string& where) {
  if (!object.is_object()) bad(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) bad(where, "missing field '" + key + "'");
  return *it;
}

template <typename T>
T read(const Json& value, const std::string& where) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(where, std::string("wrong type (") + value.type_name() + ")");
  }
}

std::vector<std::string> read_words(const Json& value, const std::string& where) {
  if (!value.is_array()) bad(where, "expected an array of words");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& w = value[i];
    const std::string at = where + "/" + std::to_string(i);
    if (w.is_string())
      out.push_back(w.get<std::string>());
    else if (w.is_number_unsigned())
      out.push_back("#" + std::to_string(w.get<unsigned long>()));
    else
      bad(at, "expected a word or an element index");
  }
  return out;
}

template <typename T>
std::optional<T> optional_field(const Json& object, const std::string& key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  return read<T>(*it, where + "/" + key);
}

Claims read_claims(const Json& value, const std::string& where) {
  if (!value.is_object()) bad(where, "expected an object");
  static const char* known[] = {"fixed_dims", "genera", "admissible", "admissible_join",
                                "dim_P", "full", "theorem_b", "theorem_c"};
  for (const auto& [key, _] : value.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      bad(where + "/" + key, "unknown claim");
  }
  Claims c;
  c.fixed_dims = optional_field<std::vector<std::vector<long long>>>(value, "fixed_dims", where);
  c.genera = optional_field<std::vector<long long>>(value, "genera", where);
  c.admissible = optional_field<bool>(value, "admissible", where);
  c.admissible_join = optional_field<bool>(value, "admissible_join", where);
  c.dim_p = optional_field<long long>(value, "dim_P", where);
  c.full = optional_field<bool>(value, "full", where);
  c.theorem_b = optional_field<bool>(value, "theorem_b", where);
  c.theorem_c = optional_field<bool>(value, "theorem_c", where);
  return c;
}

Json claims_json(const Claims& c) {
  Json out = Json::object();
  if (c.fixed_dims) out["fixed_dims"] = *c.fixed_dims;
  if (c.genera) out["genera"] = *c.genera;
  if (c.admissible) out["admissible"] = *c.admissible;
  if (c.admissible_join) out["admissible_join"] = *c.admissible_join;
  if (c.dim_p) out["dim_P"] = *c.dim_p;
  if (c.full) out["full"] = *c.full;
  if (c.theorem_b) out["theorem_b"] = *c.theorem_b;
  if (c.theorem_c) out["theorem_c"] = *c.theorem_c;
  return out;
}

// "name?key=value&key=value"
std::pair<std::string, std::map<std::string, std::string>> split_spec(std::string_view spec) {
  const auto q = spec.find('?');
  std::pair<std::string, std::map<std::string, std::string>> out{std::string(spec.substr(0, q)), {}};
  if (q == std::string_view::npos) return out;
  std::string_view rest = spec.substr(q + 1);
  while (!rest.empty()) {
    const auto amp = rest.find('&');
    const auto part = rest.substr(0, amp);
    const auto eq = part.find('=');
    if (eq == std::string_view::npos)
      throw Error(Errc::InvalidArgument, "parameter '" + std::string(part) + "' has no value");
    out.second[std::string(part.substr(0, eq))] = std::string(part.substr(eq + 1));
    if (amp == std::string_view::npos) break;
    rest = rest.substr(amp + 1);
  }
  return out;
}

long long parse_integer(const std::string& text, const std::string& what) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw Error(Errc::InvalidArgument, what + " '" + text + "' is not an integer");
  return value;
}

std::vector<unsigned> parse_list(const std::string& text, const std::string& what) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const long long v = parse_integer(item, what);
    if (v < 0) throw Error(Errc::InvalidArgument, what + " must be non-negative");
    out.push_back(unsigned(v));
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, what + " is empty");
  return out;
}

unsigned param(const std::map<std::string, std::string>& params, const std::string& key, const std::string& preset) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(Errc::InvalidArgument, "preset " + preset + " needs " + key + "=...");
  const long long v = parse_integer(it->second, key);
  if (v < 1 || v > 1'000'000) throw Error(Errc::InvalidArgument, key + " is out of range");
  return unsigned(v);
}

ScenarioFile dihedral_scenario(unsigned q) {
  if (q < 3 || q % 2 == 0) throw Error(Errc::InvalidArgument, "d2q needs an odd q >= 3");
  const long long g = 2 * q - 1;
  ScenarioFile s;
  s.name = "d2q?q=" + std::to_string(q);
  s.description = "Dihedral group of order " + std::to_string(4 * q) +
                  " acting with signature (0; 2, 2, 2, 2, " + std::to_string(2 * q) + ", " +
                  std::to_string(2 * q) + ")";
  s.group.preset = "dihedral";
  s.group.params["q"] = q;
  s.action.periods = {2, 2, 2, 2, 2 * q, 2 * q};
  s.action.vector = {"s", "s", "s*r", "s*r", "r", "r^-1"};

  const SubgroupSpec h1{"H1", {"s"}}, h2{"H2", {"s*r"}}, h3{"H3", {"r"}};
  const SubgroupSpec h4{"H4", {"r^" + std::to_string(q)}};

  CollectionSpec main{"main", {h1, h2, h3}, {}};
  main.claims.fixed_dims = std::vector<std::vector<long long>>{{0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}, {1, 0, 0, 0, 0}};
  main.claims.genera = std::vector<long long>{g, g, 1};
  main.claims.admissible = true;
  main.claims.dim_p = 0;
  main.claims.full = true;
  main.claims.theorem_c = false;

  CollectionSpec h1h3{"h1h3", {h1, h3}, {}};
  h1h3.claims.genera = std::vector<long long>{g, 1};
  h1h3.claims.admissible = true;
  h1h3.claims.dim_p = g;
  h1h3.claims.full = false;
  h1h3.claims.theorem_c = false;

  CollectionSpec h1h4{"h1h4", {h1, h4}, {}};
  h1h4.claims.fixed_dims = std::vector<std::vector<long long>>{{0, 1, 0, 1, 1}, {1, 0, 0, 0, 1}};
  h1h4.claims.genera = std::vector<long long>{g, g};
  h1h4.claims.admissible = true;
  h1h4.claims.admissible_join = false;
  h1h4.claims.dim_p = 1;
  h1h4.claims.theorem_c = false;

  CollectionSpec partition{"partition", {{"R", {"r"}}}, {}};
  for (unsigned i = 0; i < 2 * q; ++i) {
    const std::string word = i == 0 ? "s" : i == 1 ? "s*r" : "s*r^" + std::to_string(i);
    partition.subgroups.push_back({"S" + std::to_string(i), {word}});
  }
  partition.claims.theorem_b = true;

  s.collections = {main, h1h3, h1h4, partition};
  return s;
}

ScenarioFile fiber_scenario(const std::vector<unsigned>& genera) {
  if (genera.size() < 2) throw Error(Errc::TooFewFactors, "a fiber product needs at least two factors");
  const unsigned t = unsigned(genera.size());
  if (t > 6) throw Error(Errc::InvalidArgument, "fiber scenarios are limited to six factors");
  ScenarioFile s;
  std::string list;
  long long genus_sum = 0;
  for (auto g : genera) {
    if (g < 1) throw Error(Errc::InvalidArgument, "factor genera must be at least 1");
    list += (list.empty() ? "" : ",") + std::to_string(g);
    genus_sum += g;
  }
  s.name = "fiber?genera=" + list;
  s.description = "Fiber product of " + std::to_string(t) + " hyperelliptic covers, acted on by Z_2^" +
                  std::to_string(t);
  s.group.preset = "elementary2";
  s.group.params["t"] = t;
  for (unsigned i = 0; i < t; ++i) {
    for (unsigned k = 0; k < 2 * genera[i] + 2; ++k) {
      s.action.vector.push_back("e" + std::to_string(i + 1));
      s.action.periods.push_back(2);
    }
  }
  const long long half = 1LL << (t - 1);
  CollectionSpec kernels{"kernels", {}, {}};
  for (unsigned i = 0; i < t; ++i) {
    SubgroupSpec k{"K" + std::to_string(i + 1), {}};
    for (unsigned j = 0; j < t; ++j)
      if (j != i) k.generators.push_back("e" + std::to_string(j + 1));
    kernels.subgroups.push_back(k);
  }
  kernels.claims.genera = std::vector<long long>(genera.begin(), genera.end());
  kernels.claims.admissible = true;
  kernels.claims.dim_p = 1 + half * t - 2 * half + (half - 1) * genus_sum;
  kernels.claims.full = *kernels.claims.dim_p == 0;
  s.collections.push_back(kernels);
  if (t == 2) {
    CollectionSpec partition{"partition", {{"E1", {"e1"}}, {"E2", {"e2"}}, {"D", {"e1*e2"}}}, {}};
    partition.claims.theorem_b = true;
    s.collections.push_back(partition);
  }
  return s;
}

}  // namespace

Json to_json(const ScenarioFile& s) {
  Json out;
  out["name"] = s.name;
  if (!s.description.empty()) out["description"] = s.description;
  Json group = Json::object();
  if (!s.group.preset.empty()) {
    group["preset"] = s.group.preset;
    Json params = Json::object();
    for (const auto& [k, v] : s.group.params) params[k] = v;
    group["params"] = params;
  } else {
    Json gens = Json::array();
    for (const auto& g : s.group.generators) gens.push_back({{"name", g.name}, {"images", g.images}});
    group["generators"] = gens;
  }
  out["group"] = group;
  Json action;
  action["orbit_genus"] = s.action.orbit_genus;
  action["periods"] = s.action.periods;
  if (!s.action.handles.empty()) {
    Json handles = Json::array();
    for (const auto& [a, b] : s.action.handles) handles.push_back({a, b});
    action["handles"] = handles;
  }
  action["vector"] = s.action.vector;
  out["action"] = action;
  Json collections = Json::array();
  for (const auto& c : s.collections) {
    Json entry;
    entry["name"] = c.name;
    Json subgroups = Json::array();
    for (const auto& h : c.subgroups) subgroups.push_back({{"label", h.label}, {"generators", h.generators}});
    entry["subgroups"] = subgroups;
    if (!c.claims.empty()) entry["claims"] = claims_json(c.claims);
    collections.push_back(entry);
  }
  out["collections"] = collections;
  Json options = Json::object();
  if (!s.options.schur.empty()) {
    Json schur = Json::object();
    for (const auto& [l, v] : s.options.schur) schur[std::to_string(l)] = v;
    options["schur"] = schur;
  }
  if (s.options.max_order != kDefaultMaxOrder) options["max_order"] = s.options.max_order;
  if (!options.empty()) out["options"] = options;
  return out;
}

ScenarioFile scenario_from_json(const Json& doc) {
  if (!doc.is_object()) bad("", "a scenario is a JSON object");
  ScenarioFile s;
  s.name = read<std::string>(field(doc, "name", ""), "/name");
  if (auto d = optional_field<std::string>(doc, "description", "")) s.description = *d;

  const auto& group = field(doc, "group", "");
  if (group.contains("preset")) {
    s.group.preset = read<std::string>(group["preset"], "/group/preset");
    if (group.contains("params")) {
      const auto& params = group["params"];
      if (!params.is_object()) bad("/group/params", "expected an object");
      for (const auto& [k, v] : params.items()) s.group.params[k] = read<long long>(v, "/group/params/" + k);
    }
  } else {
    const auto& gens = field(group, "generators", "/group");
    if (!gens.is_array() || gens.empty()) bad("/group/generators", "expected a non-empty array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string at = "/group/generators/" + std::to_string(i);
      s.group.generators.push_back({read<std::string>(field(gens[i], "name", at), at + "/name"),
                                    read<std::vector<unsigned>>(field(gens[i], "images", at), at + "/images")});
    }
  }

  const auto& action = field(doc, "action", "");
  if (auto g = optional_field<unsigned>(action, "orbit_genus", "/action")) s.action.orbit_genus = *g;
  s.action.periods = read<std::vector<unsigned>>(field(action, "periods", "/action"), "/action/periods");
  s.action.vector = read_words(field(action, "vector", "/action"), "/action/vector");
  if (action.contains("handles")) {
    const auto& handles = action["handles"];
    if (!handles.is_array()) bad("/action/handles", "expected an array of pairs");
    for (std::size_t i = 0; i < handles.size(); ++i) {
      const std::string at = "/action/handles/" + std::to_string(i);
      const auto pair = read_words(handles[i], at);
      if (pair.size() != 2) bad(at, "a handle is a pair of words");
      s.action.handles.emplace_back(pair[0], pair[1]);
    }
  }

  if (doc.contains("collections")) {
    const auto& collections = doc["collections"];
    if (!collections.is_array()) bad("/collections", "expected an array");
    for (std::size_t i = 0; i < collections.size(); ++i) {
      const std::string at = "/collections/" + std::to_string(i);
      CollectionSpec c;
      c.name = read<std::string>(field(collections[i], "name", at), at + "/name");
      const auto& subgroups = field(collections[i], "subgroups", at);
      if (!subgroups.is_array() || subgroups.empty()) bad(at + "/subgroups", "expected a non-empty array");
      for (std::size_t j = 0; j < subgroups.size(); ++j) {
        const std::string sat = at + "/subgroups/" + std::to_string(j);
        const auto& h = subgroups[j];
        SubgroupSpec spec;
        if (h.is_array()) {
          spec.label = "H" + std::to_string(j + 1);
          spec.generators = read_words(h, sat);
        } else {
          spec.label =
              h.contains("label") ? read<std::string>(h["label"], sat + "/label") : "H" + std::to_string(j + 1);
          spec.generators = read_words(field(h, "generators", sat), sat + "/generators");
        }
        c.subgroups.push_back(spec);
      }
      if (collections[i].contains("claims")) c.claims = read_claims(collections[i]["claims"], at + "/claims");
      for (const auto& other : s.collections)
        if (other.name == c.name) bad(at + "/name", "duplicate collection '" + c.name + "'");
      s.collections.push_back(std::move(c));
    }
  }

  if (doc.contains("options")) {
    const auto& options = doc["options"];
    if (options.contains("schur")) {
      const auto& schur = options["schur"];
      if (!schur.is_object()) bad("/options/schur", "expected an object of label -> index");
      for (const auto& [k, v] : schur.items()) {
        const std::string at = "/options/schur/" + k;
        std::size_t label = 0;
        try {
          label = std::size_t(parse_integer(k.size() > 1 && k[0] == 'V' ? k.substr(1) : k, "class label"));
        } catch (const Error&) {
          bad(at, "class labels are integers or V<integer>");
        }
        s.options.schur[label] = read<unsigned>(v, at);
      }
    }
    if (auto m = optional_field<std::size_t>(options, "max_order", "/options")) s.options.max_order = *m;
  }
  return s;
}

ScenarioFile parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                      ": malformed JSON");
  }
  return scenario_from_json(doc);
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + std::string(e.what()).substr(errc_name(e.code()).size() + 2));
  }
}

std::optional<ScenarioFile> preset_scenario(std::string_view spec) {
  const auto [name, params] = split_spec(spec);
  if (name == "d2q") return dihedral_scenario(param(params, "q", name));
  if (name == "fiber") {
    auto it = params.find("genera");
    if (it == params.end()) throw Error(Errc::InvalidArgument, "preset fiber needs genera=...");
    return fiber_scenario(parse_list(it->second, "genera"));
  }
  return std::nullopt;
}

GroupPtr preset_group(std::string_view spec, std::size_t max_order) {
  const auto [name, params] = split_spec(spec);
  if (name == "dihedral") return presets::dihedral(param(params, "q", name), max_order);
  if (name == "elementary2") return presets::elementary_abelian_2(param(params, "t", name), max_order);
  if (name == "quaternion") return presets::quaternion();
  if (name == "cyclic") return presets::cyclic(param(params, "n", name), max_order);
  if (name == "symmetric") return presets::symmetric(param(params, "n", name), max_order);
  if (name == "alternating4") return presets::alternating4();
  throw Error(Errc::InvalidArgument, "unknown group preset '" + name + "'");
}

GroupPtr build_group(const GroupSpec& spec, std::size_t max_order) {
  if (!spec.preset.empty()) {
    std::string text = spec.preset;
    char sep = '?';
    for (const auto& [k, v] : spec.params) {
      text += sep + k + "=" + std::to_string(v);
      sep = '&';
    }
    return preset_group(text, max_order);
  }
  if (spec.generators.empty()) throw Error(Errc::EmptyGeneratorList, "no generators given");
  std::vector<Permutation> perms;
  std::vector<std::string> names;
  for (const auto& g : spec.generators) {
    std::vector<Element> images(g.images.begin(), g.images.end());
    perms.emplace_back(std::move(images));
    names.push_back(g.name);
  }
  return FiniteGroup::generate(perms, names, max_order);
}

Scenario resolve_scenario(const ScenarioFile& file, std::optional<std::size_t> max_order) {
  Scenario out;
  out.file = file;
  out.group = build_group(file.group, max_order.value_or(file.options.max_order));
  const auto& group = *out.group;

  auto resolve = [&](const std::string& word, const std::string& where) {
    try {
      return parse_word(group, word);
    } catch (const Error& e) {
      if (e.code() == Errc::UnknownGenerator) throw;
      throw Error(Errc::ParseError, where + ": " + e.what());
    }
  };

  out.action.group = out.group;
  out.action.orbit_genus = file.action.orbit_genus;
  out.action.periods = file.action.periods;
  for (std::size_t i = 0; i < file.action.handles.size(); ++i) {
    const std::string at = "/action/handles/" + std::to_string(i);
    out.action.handles.emplace_back(resolve(file.action.handles[i].first, at + "/0"),
                                    resolve(file.action.handles[i].second, at + "/1"));
  }
  for (std::size_t i = 0; i < file.action.vector.size(); ++i)
    out.action.branch_elements.push_back(resolve(file.action.vector[i], "/action/vector/" + std::to_string(i)));
  try {
    validate_action(out.action);
  } catch (const Error& e) {
    if (e.code() == Errc::EngineAssertion) throw;
    throw Error(Errc::ValidationError, e.what());
  }

  for (std::size_t c = 0; c < file.collections.size(); ++c) {
    std::vector<Subgroup> members;
    for (std::size_t j = 0; j < file.collections[c].subgroups.size(); ++j) {
      const auto& spec = file.collections[c].subgroups[j];
      const std::string at = "/collections/" + std::to_string(c) + "/subgroups/" + std::to_string(j);
      std::vector<Element> seed;
      for (std::size_t k = 0; k < spec.generators.size(); ++k)
        seed.push_back(resolve(spec.generators[k], at + "/generators/" + std::to_string(k)));
      members.push_back(subgroup_generate(out.group, seed));
    }
    out.collections.push_back(std::move(members));
  }
  return out;
}

ScenarioFile load_scenario(std::string_view target) {
  if (auto preset = preset_scenario(target)) return *preset;
  const std::filesystem::path path{std::string(target)};
  if (!std::filesystem::exists(path))
    throw Error(Errc::InvalidArgument, "'" + std::string(target) + "' is neither a preset nor a file");
  return load_scenario_file(path);
}

}  // namespace isodec
