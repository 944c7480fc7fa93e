#include "qsslab/scheme_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qss {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("document is not valid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

complexd parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw input_error(where + ": complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

SubsystemLayout parse_players(const json& doc) {
  if (!doc.contains("players") || !doc["players"].is_array() || doc["players"].empty())
    throw input_error("players: required nonempty array of {label, dim}");
  std::vector<Subsystem> parts;
  for (const auto& p : doc["players"]) {
    if (!p.is_object() || !p.contains("label") || !p.contains("dim") ||
        !p["label"].is_string() || !p["dim"].is_number_unsigned())
      throw input_error("players: each entry needs a string label and an unsigned dim");
    parts.push_back({p["label"].get<std::string>(), p["dim"].get<std::size_t>()});
  }
  return SubsystemLayout(std::move(parts));
}

std::vector<std::vector<std::string>> parse_access(const json& doc) {
  if (!doc.contains("access") || !doc["access"].is_array() || doc["access"].empty())
    throw input_error("access: required nonempty array of label arrays");
  std::vector<std::vector<std::string>> sets;
  for (const auto& s : doc["access"]) {
    if (!s.is_array() || s.empty()) throw input_error("access: minimal sets must be nonempty arrays");
    std::vector<std::string> labels;
    for (const auto& l : s) {
      if (!l.is_string()) throw input_error("access: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    sets.push_back(std::move(labels));
  }
  return sets;
}

SecretEnsemble parse_ensemble(const json& doc, std::size_t secret_dim) {
  if (!doc.contains("ensemble")) return SecretEnsemble::uniform_basis(secret_dim);
  const auto& ej = doc["ensemble"];
  if (!ej.is_array() || ej.empty())
    throw input_error("ensemble: must be a nonempty array of {p, amplitudes}");
  std::vector<SecretEnsemble::Item> items;
  for (const auto& item : ej) {
    if (!item.is_object() || !item.contains("p") || !item.contains("amplitudes") ||
        !item["p"].is_number() || !item["amplitudes"].is_array())
      throw input_error("ensemble: each entry needs a probability p and an amplitudes array");
    std::vector<complexd> amps;
    for (const auto& a : item["amplitudes"]) amps.push_back(parse_complex(a, "ensemble.amplitudes"));
    if (amps.size() != secret_dim)
      throw input_error("ensemble: amplitude length " + std::to_string(amps.size()) +
                        " does not match the secret dimension " + std::to_string(secret_dim));
    items.push_back({item["p"].get<double>(), StateVector(std::move(amps))});
  }
  return SecretEnsemble(secret_dim, std::move(items));
}

SchemeSpec from_json(const json& doc) {
  if (!doc.is_object()) throw input_error("scheme document must be a JSON object");
  if (!doc.contains("encoding") || !doc["encoding"].is_object())
    throw input_error("encoding: required object");
  const auto& enc = doc["encoding"];

  // Builders first; an explicit matrix needs players and access too.
  SchemeSpec scheme;
  if (enc.contains("builtin")) {
    const std::string name = enc["builtin"].get<std::string>();
    if (name == "cgl23")
      scheme = cgl23_scheme();
    else
      throw input_error("encoding.builtin: unknown builtin '" + name + "'");
  } else if (enc.contains("threshold")) {
    const auto& th = enc["threshold"];
    for (const char* key : {"t", "n", "q"})
      if (!th.contains(key) || !th[key].is_number_unsigned())
        throw input_error(std::string("encoding.threshold: requires unsigned ") + key);
    scheme = threshold_scheme(th["t"].get<std::size_t>(), th["n"].get<std::size_t>(),
                              th["q"].get<std::size_t>());
  } else if (enc.contains("matrix")) {
    const auto& mj = enc["matrix"];
    if (!mj.contains("rows") || !mj.contains("cols") || !mj.contains("entries") ||
        !mj["rows"].is_number_unsigned() || !mj["cols"].is_number_unsigned() ||
        !mj["entries"].is_array())
      throw input_error("encoding.matrix: requires rows, cols and an entries array");
    const auto rows = mj["rows"].get<std::size_t>();
    const auto cols = mj["cols"].get<std::size_t>();
    std::vector<complexd> entries;
    for (const auto& e : mj["entries"]) entries.push_back(parse_complex(e, "encoding.matrix.entries"));
    if (entries.size() != rows * cols)
      throw input_error("encoding.matrix: entries length does not match rows*cols");

    SubsystemLayout players = parse_players(doc);
    EncodingIsometry encoding(ComplexMatrix(rows, cols, std::move(entries)), players);
    AccessStructure gamma(players.labels(), parse_access(doc));
    SecretEnsemble ensemble = parse_ensemble(doc, cols);
    const std::string name = doc.value("name", "custom");
    return SchemeSpec(name, std::move(ensemble), std::move(encoding), std::move(gamma));
  } else {
    throw input_error("encoding: must contain one of builtin, threshold or matrix");
  }

  // Builder path: players/access/ensemble may override the defaults.
  if (doc.contains("players")) {
    SubsystemLayout declared = parse_players(doc);
    const auto& actual = scheme.encoding.output_layout();
    if (declared.labels() != actual.labels())
      throw input_error("players: labels do not match the builtin encoding's layout");
    for (std::size_t i = 0; i < declared.size(); ++i)
      if (declared[i].dim != actual[i].dim)
        throw input_error("players: dimension of '" + declared[i].label +
                          "' does not match the builtin encoding");
  }
  if (doc.contains("access"))
    scheme.gamma = AccessStructure(scheme.encoding.output_layout().labels(), parse_access(doc));
  if (doc.contains("ensemble"))
    scheme.ensemble_default = parse_ensemble(doc, scheme.encoding.secret_dim());
  if (doc.contains("name")) scheme.name = doc["name"].get<std::string>();
  return scheme;
}

}  // namespace

SchemeSpec load_scheme(const std::string& document) { return from_json(parse(document)); }

SchemeSpec load_scheme_file(const std::string& path) { return load_scheme(read_file(path)); }

AccessStructure load_structure(const std::string& text_or_shorthand) {
  if (text_or_shorthand == "vernam") return vernam_structure();
  if (text_or_shorthand.rfind("threshold:", 0) == 0) {
    const std::string args = text_or_shorthand.substr(10);
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw input_error("structure shorthand: expected threshold:t,n");
    try {
      const std::size_t t = std::stoul(args.substr(0, comma));
      const std::size_t n = std::stoul(args.substr(comma + 1));
      return threshold_structure(t, n);
    } catch (const std::logic_error&) {
      throw input_error("structure shorthand: expected threshold:t,n with integers");
    }
  }

  const json doc = parse(text_or_shorthand);
  if (!doc.is_object()) throw input_error("structure document must be a JSON object");
  std::vector<std::string> players;
  if (!doc.contains("players") || !doc["players"].is_array() || doc["players"].empty())
    throw input_error("players: required nonempty array");
  for (const auto& p : doc["players"]) {
    if (p.is_string())
      players.push_back(p.get<std::string>());
    else if (p.is_object() && p.contains("label") && p["label"].is_string())
      players.push_back(p["label"].get<std::string>());
    else
      throw input_error("players: entries must be labels or {label, dim} objects");
  }
  return AccessStructure(std::move(players), parse_access(doc));
}

AccessStructure load_structure_file(const std::string& path) {
  return load_structure(read_file(path));
}

std::string scheme_to_document(const SchemeSpec& scheme) {
  json doc;
  doc["name"] = scheme.name;
  doc["players"] = json::array();
  for (const auto& p : scheme.encoding.output_layout().parts())
    doc["players"].push_back({{"label", p.label}, {"dim", p.dim}});
  json entries = json::array();
  for (const auto& e : scheme.encoding.matrix().entries())
    entries.push_back({e.real(), e.imag()});
  doc["encoding"] = {{"matrix",
                      {{"rows", scheme.encoding.matrix().rows()},
                       {"cols", scheme.encoding.matrix().cols()},
                       {"entries", std::move(entries)}}}};
  doc["access"] = json::array();
  for (const auto& s : scheme.gamma.minimal_authorized()) doc["access"].push_back(s);
  doc["ensemble"] = json::array();
  for (const auto& item : scheme.ensemble_default.items()) {
    json amps = json::array();
    for (const auto& a : item.state.amplitudes()) amps.push_back({a.real(), a.imag()});
    doc["ensemble"].push_back({{"p", item.probability}, {"amplitudes", std::move(amps)}});
  }
  return doc.dump(2);
}

}  // namespace qss
