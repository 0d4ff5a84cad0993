#include "io.hpp"

#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace umk {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Rat rat_at(const json& cell, const std::string& where) {
  if (!cell.is_string()) {
    throw ParseError(where + ": expected a rational string");
  }
  try {
    return Rat::parse(cell.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

FiniteSpace space_from_json(const std::string& text) {
  const json j = parse_json(text, "space JSON");
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix")) {
    throw ParseError("space JSON: expected an object with 'labels' and 'matrix'");
  }
  if (!j["labels"].is_array()) throw ParseError("space JSON: 'labels' must be an array");
  if (!j["matrix"].is_array()) throw ParseError("space JSON: 'matrix' must be an array");
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw ParseError("space JSON: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::vector<Rat>> matrix;
  std::size_t row = 0;
  for (const auto& jrow : j["matrix"]) {
    ++row;
    if (!jrow.is_array()) {
      throw ParseError("space JSON: matrix row " + std::to_string(row) + " is not an array");
    }
    std::vector<Rat> out;
    std::size_t col = 0;
    for (const auto& cell : jrow) {
      ++col;
      out.push_back(rat_at(cell, "space JSON: matrix[" + std::to_string(row) + "][" +
                                     std::to_string(col) + "]"));
    }
    matrix.push_back(std::move(out));
  }
  return FiniteSpace::create(std::move(labels), std::move(matrix));
}

std::string space_to_json(const FiniteSpace& space) {
  json j;
  j["labels"] = space.labels();
  json matrix = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(space.at(i, k).str());
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  return j.dump();
}

FiniteSpace space_from_csv(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!trim(line).empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw ParseError("space CSV: empty input");
  const auto header = split(lines.front(), ',');
  if (header.size() < 2) throw ParseError("space CSV: header row needs labels");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < header.size(); ++i) labels.push_back(trim(header[i]));
  const std::size_t n = labels.size();
  if (lines.size() != n + 1) {
    throw ParseError("space CSV: expected " + std::to_string(n) + " data rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Rat>> matrix;
  for (std::size_t r = 0; r < n; ++r) {
    const auto cells = split(lines[r + 1], ',');
    if (cells.size() != n + 1) {
      throw ParseError("space CSV: row " + std::to_string(r + 2) + " has " +
                       std::to_string(cells.size()) + " cells, expected " + std::to_string(n + 1));
    }
    if (trim(cells[0]) != labels[r]) {
      throw ParseError("space CSV: row " + std::to_string(r + 2) + " label '" + trim(cells[0]) +
                       "' does not match column label '" + labels[r] + "'");
    }
    std::vector<Rat> row;
    for (std::size_t c = 1; c <= n; ++c) {
      try {
        row.push_back(Rat::parse(trim(cells[c])));
      } catch (const Error& e) {
        throw ParseError("space CSV: row " + std::to_string(r + 2) + " column " +
                         std::to_string(c + 1) + ": " + e.what());
      }
    }
    matrix.push_back(std::move(row));
  }
  return FiniteSpace::create(std::move(labels), std::move(matrix));
}

std::string space_to_csv(const FiniteSpace& space) {
  std::string out;
  for (const auto& l : space.labels()) {
    out += ',';
    out += l;
  }
  out += '\n';
  for (std::size_t i = 0; i < space.size(); ++i) {
    out += space.label(i);
    for (std::size_t k = 0; k < space.size(); ++k) {
      out += ',';
      out += space.at(i, k).str();
    }
    out += '\n';
  }
  return out;
}

namespace {

TailRule rule_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rule") || !j["rule"].is_string()) {
    throw ParseError("description JSON: tail rule needs a 'rule' name");
  }
  const std::string kind = j["rule"].get<std::string>();
  const json params = j.value("params", json::object());
  auto param = [&](const char* name) {
    if (!params.contains(name)) {
      throw ParseError("description JSON: rule '" + kind + "' needs parameter '" + name + "'");
    }
    return rat_at(params[name], "description JSON: parameter '" + std::string(name) + "'");
  };
  if (kind == "reciprocal") return TailRule::reciprocal();
  if (kind == "shifted") return TailRule::shifted(param("offset"));
  if (kind == "geometric") return TailRule::geometric(param("scale"), param("ratio"));
  if (kind == "approach") return TailRule::approach(param("limit"));
  throw ParseError("description JSON: unknown rule '" + kind + "'");
}

json rule_to_json(const TailRule& rule) {
  switch (rule.kind()) {
    case TailRule::Kind::Reciprocal:
      return json{{"rule", "reciprocal"}};
    case TailRule::Kind::Shifted:
      return json{{"rule", "shifted"}, {"params", {{"offset", rule.limit().str()}}}};
    case TailRule::Kind::Geometric: {
      // first term = scale * ratio; recover scale from it.
      const Rat ratio = rule.term(2) / rule.term(1);
      const Rat scale = rule.term(1) / ratio;
      return json{{"rule", "geometric"},
                  {"params", {{"scale", scale.str()}, {"ratio", ratio.str()}}}};
    }
    case TailRule::Kind::Approach:
      return json{{"rule", "approach"}, {"params", {{"limit", rule.limit().str()}}}};
  }
  throw Error("unreachable");
}

}  // namespace

SetDescription description_from_json(const std::string& text) {
  const json j = parse_json(text, "description JSON");
  if (!j.is_object() || !j.contains("head") || !j["head"].is_array()) {
    throw ParseError("description JSON: expected an object with a 'head' array");
  }
  std::vector<Rat> head;
  std::size_t pos = 0;
  for (const auto& cell : j["head"]) {
    ++pos;
    head.push_back(rat_at(cell, "description JSON: head[" + std::to_string(pos) + "]"));
  }
  SetDescription desc{DistanceSet::from_values(std::move(head)), {}};
  if (j.contains("tail")) {
    const json& tail = j["tail"];
    if (tail.is_object() && tail.value("rule", "") == "concat") {
      const json params = tail.value("params", json::object());
      if (!params.contains("first") || !params.contains("second")) {
        throw ParseError("description JSON: concat needs 'first' and 'second' rules");
      }
      desc.blocks.push_back(rule_from_json(params["first"]));
      desc.blocks.push_back(rule_from_json(params["second"]));
    } else {
      desc.blocks.push_back(rule_from_json(tail));
    }
  }
  return desc;
}

std::string description_to_json(const SetDescription& desc) {
  json j;
  json head = json::array();
  for (const auto& v : desc.head.values()) head.push_back(v.str());
  j["head"] = std::move(head);
  if (desc.blocks.size() == 1) {
    j["tail"] = rule_to_json(desc.blocks.front());
  } else if (desc.blocks.size() == 2) {
    j["tail"] = json{{"rule", "concat"},
                     {"params",
                      {{"first", rule_to_json(desc.blocks[0])},
                       {"second", rule_to_json(desc.blocks[1])}}}};
  } else if (!desc.blocks.empty()) {
    throw StructureError("descriptions serialize with at most two blocks");
  }
  return j.dump();
}

GammaDistance gamma_from_json(const std::string& text) {
  const json j = parse_json(text, "gamma JSON");
  if (!j.is_object() || !j.contains("gamma") || !j.contains("labels") || !j.contains("matrix")) {
    throw ParseError("gamma JSON: expected an object with 'gamma', 'labels' and 'matrix'");
  }
  auto strings = [](const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string("gamma JSON: ") + what + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : arr) {
      if (!x.is_string()) {
        throw ParseError(std::string("gamma JSON: ") + what + " entries must be strings");
      }
      out.push_back(x.get<std::string>());
    }
    return out;
  };
  auto names = strings(j["gamma"], "'gamma'");
  auto labels = strings(j["labels"], "'labels'");
  if (!j["matrix"].is_array()) throw ParseError("gamma JSON: 'matrix' must be an array");
  std::vector<std::vector<std::string>> matrix;
  std::size_t row = 0;
  for (const auto& jrow : j["matrix"]) {
    ++row;
    matrix.push_back(strings(jrow, ("matrix row " + std::to_string(row)).c_str()));
  }
  return GammaDistance::create(OrderedGamma::from_names(std::move(names)), std::move(labels),
                               std::move(matrix));
}

std::string gamma_to_json(const GammaDistance& gd) {
  json j;
  json names = json::array();
  for (std::size_t i = 0; i < gd.gamma().size(); ++i) names.push_back(gd.gamma().name(i));
  j["gamma"] = std::move(names);
  j["labels"] = gd.labels();
  json matrix = json::array();
  for (std::size_t i = 0; i < gd.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < gd.size(); ++k) row.push_back(gd.gamma().name(gd.at(i, k)));
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  return j.dump();
}

namespace {

json witness_to_json(const Witness& w) {
  return json{{"points", w.points}, {"law", w.law}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

std::string witness_to_text(const Witness& w) {
  std::string out = "  " + w.law + " at (";
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    if (i) out += ", ";
    out += w.points[i];
  }
  out += "): lhs " + w.lhs + ", rhs " + w.rhs;
  return out;
}

}  // namespace

std::string render_report(const ValidationReport& report, Format format) {
  if (format == Format::Json) {
    json j;
    j["verdict"] = report.valid() ? "valid" : "invalid";
    json ws = json::array();
    for (const auto& w : report.witnesses) ws.push_back(witness_to_json(w));
    j["witnesses"] = std::move(ws);
    return j.dump();
  }
  if (report.valid()) return "valid\n";
  std::string out = "invalid: " + std::to_string(report.witnesses.size()) + " witness" +
                    (report.witnesses.size() == 1 ? "" : "es") + "\n";
  for (const auto& w : report.witnesses) out += witness_to_text(w) + "\n";
  return out;
}

std::string render_distance_set(const DistanceSet& ds, Format format) {
  if (format == Format::Json) {
    json values = json::array();
    for (const auto& v : ds.values()) values.push_back(v.str());
    return json{{"values", std::move(values)}}.dump();
  }
  std::string out;
  for (const auto& v : ds.values()) {
    if (!out.empty()) out += ' ';
    out += v.str();
  }
  out += '\n';
  return out;
}

namespace {

std::string tag_name(OrderTypeClass::Tag tag) {
  switch (tag) {
    case OrderTypeClass::Tag::FiniteChain:
      return "FiniteChain";
    case OrderTypeClass::Tag::OnePlusOmegaStar:
      return "OnePlusOmegaStar";
    case OrderTypeClass::Tag::Other:
      return "Other";
  }
  return "?";
}

}  // namespace

std::string render_order_type(const OrderTypeClass& order, Format format) {
  std::string tag = tag_name(order.tag);
  if (order.tag == OrderTypeClass::Tag::FiniteChain) {
    tag += "(" + std::to_string(order.chain_length) + ")";
  }
  if (format == Format::Json) {
    json j{{"tag", tag}, {"evidence", order.evidence}};
    if (order.tag == OrderTypeClass::Tag::FiniteChain) j["chain_length"] = order.chain_length;
    return j.dump();
  }
  return tag + ": " + order.evidence + "\n";
}

std::string render_tb_check(const TbCheckResult& result, Format format) {
  if (format == Format::Json) {
    return json{{"totally_boundable", result.totally_boundable},
                {"route_order_type", result.route_order_type},
                {"route_normal_form", result.route_normal_form},
                {"evidence", result.evidence}}
        .dump();
  }
  return std::string(result.totally_boundable ? "true" : "false") + ": " + result.evidence + "\n";
}

std::string render_members(const std::vector<std::string>& members, Format format) {
  if (format == Format::Json) {
    return json{{"members", members}}.dump();
  }
  std::string out;
  for (const auto& m : members) {
    if (!out.empty()) out += ' ';
    out += m;
  }
  out += '\n';
  return out;
}

std::string render_ball(const Ball& ball, Format format) {
  if (format == Format::Json) {
    return json{{"center", ball.center}, {"radius", ball.radius.str()}, {"members", ball.members}}
        .dump();
  }
  std::string out = "B_" + ball.radius.str() + "(" + ball.center + "):";
  for (const auto& m : ball.members) out += " " + m;
  out += '\n';
  return out;
}

std::string render_partition(const BallPartition& partition, Format format) {
  if (format == Format::Json) {
    json classes = json::array();
    for (const auto& b : partition.classes) {
      classes.push_back(json{{"center", b.center}, {"members", b.members}});
    }
    return json{{"radius", partition.radius.str()}, {"classes", std::move(classes)}}.dump();
  }
  std::string out;
  for (const auto& b : partition.classes) {
    out += b.center + ":";
    for (const auto& m : b.members) out += " " + m;
    out += '\n';
  }
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& cell : split(text, ',')) {
    const std::string t = trim(cell);
    if (t.empty()) throw ParseError("empty entry in rational list '" + text + "'");
    out.push_back(Rat::parse(t));
  }
  return out;
}

std::vector<std::vector<std::string>> parse_class_spec(const std::string& text) {
  std::vector<std::vector<std::string>> classes;
  for (const auto& block : split(text, '|')) {
    classes.push_back(parse_label_list(block));
  }
  return classes;
}

std::vector<std::string> parse_label_list(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& cell : split(text, ',')) {
    const std::string t = trim(cell);
    if (t.empty()) throw ParseError("empty label in list '" + text + "'");
    out.push_back(t);
  }
  return out;
}

}  // namespace umk
