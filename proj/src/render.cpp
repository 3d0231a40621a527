#include <algorithm>
#include <sstream>

#include "isodec/error.hpp"
#include "isodec/report.hpp"

namespace isodec {

namespace {

std::string scalar(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string joined(const Json& list, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? sep : "") + scalar(list[i]);
  return out;
}

std::string tuple(const Json& list) { return "(" + joined(list, ", ") + ")"; }

// Left-aligned columns, two spaces apart.
std::string table(const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

void header(std::ostream& out, const Json& doc, const std::string& subject) {
  out << doc["engine"]["name"].get<std::string>() << " " << doc["engine"]["version"].get<std::string>() << "  "
      << doc["command"].get<std::string>() << "  " << subject << "\n";
}

void group_block(std::ostream& out, const Json& group) {
  out << "group: order " << scalar(group["order"]) << ", degree " << scalar(group["degree"]) << ", exponent "
      << scalar(group["exponent"]) << "\n";
  for (const auto& g : group["generators"]) out << "  " << scalar(g["name"]) << " = " << scalar(g["cycles"]) << "\n";
}

void action_block(std::ostream& out, const Json& action) {
  out << "action: orbit genus " << scalar(action["orbit_genus"]) << ", periods " << tuple(action["periods"])
      << "\n";
  if (!action["handles"].empty()) {
    out << "  handles:";
    for (const auto& h : action["handles"]) out << " [" << scalar(h[0]) << ", " << scalar(h[1]) << "]";
    out << "\n";
  }
  out << "  vector " << tuple(action["vector"]) << "\n";
  out << "  genus " << scalar(action["genus"]) << ", branch number " << scalar(action["branch_number"]) << "\n";
}

void character_block(std::ostream& out, const Json& ct) {
  out << "\ncharacter table (" << scalar(ct["root"]) << ", prime " << scalar(ct["prime"]) << ")\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> reps{"class", ""}, sizes{"size", ""}, orders{"order", ""};
  for (const auto& c : ct["classes"]) {
    reps.push_back(scalar(c["representative"]));
    sizes.push_back(scalar(c["size"]));
    orders.push_back(scalar(c["element_order"]));
  }
  rows.push_back(reps);
  rows.push_back(sizes);
  rows.push_back(orders);
  for (const auto& chi : ct["irreducibles"]) {
    std::vector<std::string> row{scalar(chi["label"]), "FS " + scalar(chi["indicator"])};
    for (const auto& v : chi["values"]) row.push_back(scalar(v));
    rows.push_back(row);
  }
  out << table(rows, "  ");
}

void classes_block(std::ostream& out, const Json& classes) {
  out << "\nrational classes\n";
  const bool factors = !classes.empty() && classes[0].contains("dim_B");
  std::vector<std::vector<std::string>> rows{{"label", "members", "d", "f", "s", "source", "n", "dim W"}};
  if (factors) {
    rows[0].push_back("dim B");
    rows[0].push_back("mult");
  }
  for (const auto& w : classes) {
    std::vector<std::string> row{scalar(w["label"]),        joined(w["members"], ","), scalar(w["degree"]),
                                 scalar(w["field_degree"]), scalar(w["schur_index"]),  scalar(w["schur_source"]),
                                 scalar(w["n"]),            scalar(w["dim_W"])};
    if (factors) {
      row.push_back(scalar(w["dim_B"]));
      row.push_back(scalar(w["rational_multiplicity"]));
    }
    rows.push_back(row);
  }
  out << table(rows, "  ");
}

std::string class_label(std::size_t l) { return "V" + std::to_string(l + 1); }

void admissibility_block(std::ostream& out, const Json& adm, const Json& labels) {
  out << "  admissibility (" << scalar(adm["ambient"]) << ", order " << scalar(adm["ambient_order"])
      << ", orbit genus " << scalar(adm["ambient_orbit_genus"]) << "): " << scalar(adm["admissible"]) << "\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"", ""};
  for (std::size_t l = 0; l < adm["degrees"].size(); ++l) head.push_back(class_label(l));
  rows.push_back(head);
  for (std::size_t i = 0; i < adm["fixed_dims"].size(); ++i) {
    std::vector<std::string> row{scalar(labels[i]), "d^H"};
    for (const auto& d : adm["fixed_dims"][i]) row.push_back(scalar(d));
    rows.push_back(row);
  }
  auto line = [&](const std::string& name, const Json& values) {
    std::vector<std::string> row{name, ""};
    for (const auto& v : values) row.push_back(scalar(v));
    rows.push_back(row);
  };
  line("sum", adm["sums"]);
  line("d", adm["degrees"]);
  line("dim B", adm["dim_B"]);
  line("slack", adm["slacks"]);
  out << table(rows, "    ");
}

void collection_block(std::ostream& out, const Json& c) {
  out << "\ncollection " << scalar(c["name"]) << " (ambient " << scalar(c["ambient"]) << ")\n";
  Json labels = Json::array();
  std::vector<std::vector<std::string>> rows{{"label", "generators", "order", "genus", "prym", "d^H", "n^H"}};
  for (const auto& h : c["subgroups"]) {
    labels.push_back(h["label"]);
    rows.push_back({scalar(h["label"]), "<" + joined(h["generators"], ", ") + ">", scalar(h["order"]),
                    scalar(h["genus"]), scalar(h["prym_dim"]), tuple(h["fixed_dims"]), tuple(h["exponents"])});
  }
  out << table(rows, "  ");
  for (const auto& h : c["subgroups"]) out << "  " << scalar(h["jacobian"]) << "\n";
  out << "  genus sum " << scalar(c["genus_sum"]) << ", complement " << scalar(c["complement_dim"]) << "\n";
  admissibility_block(out, c["admissibility"], labels);
  if (c.contains("admissibility_join")) admissibility_block(out, c["admissibility_join"], labels);

  const auto& t1 = c["theorem1"];
  if (t1.is_null()) {
    out << "  theorem 1: not applicable (collection not admissible)\n";
  } else {
    out << "  theorem 1 (" << scalar(t1["ambient"]) << "): " << scalar(t1["statement"]) << "\n";
    out << "    genera " << tuple(t1["genera"]) << ", delta~ " << tuple(t1["delta_tilde"]) << ", dim P "
        << scalar(t1["dim_P"]) << ", full " << scalar(t1["full"]) << "\n";
  }
  for (const auto& k : c["corollary1"])
    out << "  corollary 1, k = " << scalar(k["k"]) << ": others " << scalar(k["others_genus"]) << " <= prym "
        << scalar(k["prym_dim"]) << ", equality " << scalar(k["equality"]) << "\n";

  const auto& p1 = c["prop1"];
  out << "  proposition 1: (1) " << scalar(p1["statement1"]) << ", (2) " << scalar(p1["statement2"]) << ", (3) "
      << scalar(p1["statement3"]) << "; multiplicities " << tuple(p1["multiplicities"]) << "\n";
  if (p1.contains("regular_form"))
    out << "    regular form " << scalar(p1["regular_form"]) << ", a1 by degree "
        << scalar(p1.value("a1_by_degree", Json(nullptr))) << ", a1 by trivial " << scalar(p1["a1_by_trivial"])
        << "\n";
  if (c.contains("prop2")) {
    const auto& p2 = c["prop2"];
    out << "  proposition 2: " << scalar(p2["statement"]) << "\n";
    out << "    join <" << joined(p2["join_generators"], ", ") << "> order " << scalar(p2["join_order"])
        << " genus " << scalar(p2["genus_join"]) << ", slacks " << tuple(p2["slacks"]) << "\n";
  }
  const auto& tb = c["theorem_b"];
  if (tb.contains("holds"))
    out << "  theorem B: " << scalar(tb["holds"]) << " (" << scalar(tb["dimension_lhs"]) << " = "
        << scalar(tb["dimension_rhs"]) << ")\n";
  else
    out << "  theorem B: not a partition (" << scalar(tb["reason"]) << ")\n";
  const auto& tc = c["theorem_c"];
  out << "  theorem C hypotheses: permute " << scalar(tc["permute"]) << ", joins genus zero "
      << scalar(tc["joins_genus_zero"]) << ", genus sum " << scalar(tc["genus_sum"]) << "; applies "
      << scalar(tc["applies"]) << "\n";
  for (const auto& check : c["checks"])
    out << "  claim " << scalar(check["claim"]) << ": expected " << check["expected"].dump() << ", computed "
        << check["computed"].dump() << (check["ok"].get<bool>() ? "" : "  MISMATCH") << "\n";
}

void footer(std::ostream& out, const Json& doc) {
  out << "\n";
  if (doc["discrepancies"].empty()) {
    out << "discrepancies: none\n";
  } else {
    out << "discrepancies:\n";
    for (const auto& d : doc["discrepancies"])
      out << "  [" << scalar(d["collection"]) << "] " << scalar(d["claim"]) << ": " << scalar(d["note"]) << "\n";
  }
  out << "status: " << scalar(doc["status"]) << " (exit " << scalar(doc["exit_code"]) << ")\n";
}

void render_analyze(std::ostream& out, const Json& doc) {
  header(out, doc, scalar(doc["scenario"]["name"]));
  group_block(out, doc["group"]);
  action_block(out, doc["action"]);
  character_block(out, doc["character_table"]);
  classes_block(out, doc["rational_classes"]);
  out << "  conservation: sum n dim B = " << scalar(doc["conservation"]["sum_n_dim_B"]) << ", genus "
      << scalar(doc["conservation"]["genus"]) << "\n";
  out << "  " << scalar(doc["decomposition"]) << "\n";
  for (const auto& c : doc["collections"]) collection_block(out, c);
  footer(out, doc);
}

void render_search(std::ostream& out, const Json& doc) {
  header(out, doc, scalar(doc["scenario"]["name"]));
  group_block(out, doc["group"]);
  action_block(out, doc["action"]);
  const auto& o = doc["options"];
  out << "\nsearch: max t " << scalar(o["max_t"]) << ", require full " << scalar(o["require_full"])
      << ", dedupe conjugates " << scalar(o["dedupe_conjugates"]) << "; " << scalar(doc["result_count"])
      << " admissible collections\n";
  for (const auto& r : doc["results"]) {
    std::string members;
    for (const auto& h : r["subgroups"])
      members += (members.empty() ? "" : ", ") + ("<" + joined(h["generators"], ",") + ">");
    out << "  {" << members << "}  genera";
    for (const auto& h : r["subgroups"]) out << " " << scalar(h["genus"]);
    out << "  sum " << scalar(r["genus_sum"]) << (r["full"].get<bool>() ? "  full" : "") << "\n";
  }
  footer(out, doc);
}

void render_fiber(std::ostream& out, const Json& doc) {
  const auto& p = doc["plan"];
  header(out, doc, scalar(p["mode"]) + " " + tuple(p["genera"]));
  out << "group: Z_2^" << p["genera"].size() << " of order " << scalar(p["group_order"]) << "\n";
  out << "action: orbit genus 0, periods " << tuple(p["periods"]) << "\n";
  out << "  vector " << tuple(p["vector"]) << "\n";
  for (const auto& k : p["kernels"])
    out << "  " << scalar(k["label"]) << " = <" << joined(k["generators"], ", ") << ">  order "
        << scalar(k["order"]) << "  genus " << scalar(k["genus"]) << "\n";
  out << "genus " << scalar(p["genus"]) << " (formula " << scalar(p["predicted_genus"]) << ")\n";
  out << "kernels admissible: " << scalar(p["admissible"]) << "\n";
  out << "dim P " << scalar(p["dim_P"]) << " (formula " << scalar(p["predicted_dim_P"]) << ")\n";
  if (p.contains("elliptic_count")) {
    out << "elliptic factors: " << scalar(p["elliptic_count"]) << "\n";
    for (std::size_t j = 0; j < p["pairing"].size(); ++j)
      out << "  genus-2 input " << j + 1 << " carries E" << scalar(p["pairing"][j][0]) << " x E"
          << scalar(p["pairing"][j][1]) << "\n";
  }
  footer(out, doc);
}

void render_chartable(std::ostream& out, const Json& doc) {
  header(out, doc, scalar(doc["source"]));
  group_block(out, doc["group"]);
  character_block(out, doc["character_table"]);
  classes_block(out, doc["rational_classes"]);
  footer(out, doc);
}

void render_theorem_b(std::ostream& out, const Json& doc) {
  header(out, doc, scalar(doc["scenario"]["name"]));
  group_block(out, doc["group"]);
  action_block(out, doc["action"]);
  for (const auto& entry : doc["reports"]) {
    const auto& r = entry["report"];
    out << "\ncollection " << scalar(entry["collection"]) << " (t = " << scalar(r["t"]) << ")\n";
    std::vector<std::vector<std::string>> rows{{"label", "generators", "order", "genus"}};
    for (const auto& h : entry["subgroups"])
      rows.push_back({scalar(h["label"]), "<" + joined(h["generators"], ", ") + ">", scalar(h["order"]),
                      scalar(h["genus"])});
    out << table(rows, "  ");
    out << "  character identity: " << scalar(r["characters_agree"]) << "\n";
    std::vector<std::vector<std::string>> cls{{"", "lhs", "rhs"}};
    for (std::size_t l = 1; l < r["class_lhs"].size(); ++l)
      cls.push_back({class_label(l), scalar(r["class_lhs"][l]), scalar(r["class_rhs"][l])});
    out << "  class identity: " << scalar(r["classes_agree"]) << "\n" << table(cls, "    ");
    out << "  dimension identity: " << scalar(r["dimension_lhs"]) << " = " << scalar(r["dimension_rhs"]) << "\n";
    out << "  holds: " << scalar(r["holds"]) << "\n";
  }
  footer(out, doc);
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  const auto command = doc.at("command").get<std::string>();
  if (command == "analyze")
    render_analyze(out, doc);
  else if (command == "search")
    render_search(out, doc);
  else if (command == "fiber")
    render_fiber(out, doc);
  else if (command == "chartable")
    render_chartable(out, doc);
  else if (command == "theorem-b")
    render_theorem_b(out, doc);
  else
    throw Error(Errc::InvalidArgument, "cannot render command '" + command + "'");
  return out.str();
}

}  // namespace isodec
