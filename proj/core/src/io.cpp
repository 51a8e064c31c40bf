#include "modtheta/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "modtheta/errors.hpp"

namespace modtheta {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Recursive-descent reader for the value syntax of datum documents.
class ValueReader {
 public:
  explicit ValueReader(const std::string& s) : s_(s) {}

  Json value() {
    skip();
    if (pos_ >= s_.size()) parse_fail("unexpected end of value");
    char c = s_[pos_];
    if (c == '[') return list();
    if (c == '{') return table();
    if (c == '"' || c == '\'') return Json(quoted());
    std::string tok = bare();
    if (tok.empty()) parse_fail(std::string("unexpected character '") + c + "'");
    if (is_integer(tok)) return Json(std::stoll(tok));
    return Json(tok);
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) parse_fail("trailing characters: " + s_.substr(pos_));
  }

 private:
  static bool is_integer(const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string quoted() {
    char q = s_[pos_++];
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != q) out += s_[pos_++];
    if (pos_ >= s_.size()) parse_fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string bare() {
    std::string out;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ':' || c == '=' || c == '[' || c == ']' ||
          c == '{' || c == '}' || c == '"' || c == '\'')
        break;
      out += c;
      ++pos_;
    }
    return out;
  }

  std::string key() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '"' || s_[pos_] == '\'')) return quoted();
    std::string k = bare();
    if (k.empty()) parse_fail("expected a key");
    return k;
  }

  Json list() {
    ++pos_;
    Json out = Json::array();
    if (eat(']')) return out;
    while (true) {
      out.push_back(value());
      if (eat(']')) return out;
      if (!eat(',')) parse_fail("expected ',' or ']'");
      if (eat(']')) return out;
    }
  }

  Json table() {
    ++pos_;
    Json out = Json::object();
    if (eat('}')) return out;
    while (true) {
      std::string k = key();
      if (!eat(':') && !eat('=')) parse_fail("expected ':' or '=' after key " + k);
      if (out.contains(k)) parse_fail("duplicate key " + k);
      out[k] = value();
      if (eat('}')) return out;
      if (!eat(',')) parse_fail("expected ',' or '}'");
      if (eat('}')) return out;
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  bool in_str = false;
  char q = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_str) {
      if (c == q) in_str = false;
    } else if (c == '"' || c == '\'') {
      in_str = true;
      q = c;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
  }
  return depth;
}

Json parse_key_value(const std::string& text) {
  Json doc = Json::object();
  std::istringstream in(text);
  std::string line, pending;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    pending += strip_comment(line) + "\n";
    if (bracket_balance(pending) > 0) continue;
    std::string stmt = trim(pending);
    pending.clear();
    if (stmt.empty()) continue;
    auto eq = stmt.find('=');
    if (eq == std::string::npos) parse_fail("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(stmt.substr(0, eq));
    if (key.empty()) parse_fail("line " + std::to_string(lineno) + ": empty key");
    if (doc.contains(key)) parse_fail("duplicate key " + key);
    std::string rhs = stmt.substr(eq + 1);
    ValueReader reader(rhs);
    doc[key] = reader.value();
    reader.finish();
  }
  if (!trim(pending).empty()) parse_fail("unbalanced brackets at end of document");
  return doc;
}

Int as_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t used = 0;
      Int v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  parse_fail(what + " must be an integer");
}

std::string as_string(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<Int>());
  parse_fail(what + " must be a string");
}

RawDatum raw_from_json(const Json& doc) {
  if (!doc.is_object()) parse_fail("datum document must be a table");
  for (const char* k : {"case", "n", "p", "orbits", "signature"})
    if (!doc.contains(k)) parse_fail(std::string("missing key ") + k);
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::set<std::string> known{"schema_version", "case", "n", "p", "orbits", "star", "cm_type", "signature"};
    if (!known.count(it.key())) parse_fail("unknown key " + it.key());
  }
  RawDatum raw;
  raw.kind = as_string(doc["case"], "case");
  raw.n = as_int(doc["n"], "n");
  raw.p = as_int(doc["p"], "p");
  if (!doc["orbits"].is_array()) parse_fail("orbits must be a list of lists");
  for (const auto& o : doc["orbits"]) {
    if (!o.is_array()) parse_fail("orbits must be a list of lists");
    std::vector<std::string> members;
    for (const auto& m : o) members.push_back(as_string(m, "embedding id"));
    raw.orbits.push_back(members);
  }
  if (doc.contains("star")) {
    if (!doc["star"].is_object()) parse_fail("star must be a table");
    for (auto it = doc["star"].begin(); it != doc["star"].end(); ++it)
      raw.star[it.key()] = as_string(it.value(), "star image");
  }
  if (doc.contains("cm_type")) {
    if (!doc["cm_type"].is_array()) parse_fail("cm_type must be a list");
    for (const auto& m : doc["cm_type"]) raw.cm_type.push_back(as_string(m, "embedding id"));
  }
  if (!doc["signature"].is_object()) parse_fail("signature must be a table");
  for (auto it = doc["signature"].begin(); it != doc["signature"].end(); ++it)
    raw.signature[it.key()] = as_int(it.value(), "signature value");
  return raw;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{' || c == '(' || c == '[') ++depth;
    if (c == '}' || c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string unbrace(const std::string& v) {
  std::string t = trim(v);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') return t.substr(1, t.size() - 2);
  return t;
}

Int parse_int_token(const std::string& tok) {
  std::string t = trim(tok);
  try {
    std::size_t used = 0;
    Int v = std::stoll(t, &used);
    if (used == t.size()) return v;
  } catch (const std::exception&) {
  }
  parse_fail("expected an integer, got '" + t + "'");
}

}  // namespace

RawDatum parse_datum_document(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(t);
    } catch (const Json::exception& e) {
      parse_fail(std::string("invalid JSON: ") + e.what());
    }
    return raw_from_json(doc);
  }
  return raw_from_json(parse_key_value(text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ShimuraDatum load_datum_file(const std::string& path) { return validate_datum(parse_datum_document(read_file(path))); }

Json datum_to_json(const ShimuraDatum& d) {
  RawDatum raw = to_raw(d);
  Json j = Json::object();
  j["case"] = raw.kind;
  j["n"] = std::to_string(raw.n);
  j["p"] = std::to_string(raw.p);
  j["orbits"] = raw.orbits;
  j["star"] = raw.star;
  j["cm_type"] = raw.cm_type;
  Json sig = Json::object();
  for (const auto& [k, v] : raw.signature) sig[k] = std::to_string(v);
  j["signature"] = sig;
  return j;
}

Weight parse_weight(const ShimuraDatum& d, const std::string& text) {
  std::map<std::string, std::vector<Int>> comps;
  std::string t = trim(text);
  if (t.empty()) return zero_weight(d);
  for (const auto& part : split_top(t, ';')) {
    std::string p = trim(part);
    if (p.empty()) continue;
    auto colon = p.find(':');
    if (colon == std::string::npos) parse_fail("weight component '" + p + "' lacks ':'");
    std::string id = trim(p.substr(0, colon));
    if (comps.count(id)) parse_fail("duplicate weight component " + id);
    std::vector<Int> tuple;
    std::string body = trim(p.substr(colon + 1));
    if (!body.empty())
      for (const auto& tok : split_top(body, ',')) tuple.push_back(parse_int_token(tok));
    comps[id] = tuple;
  }
  return make_weight(d, comps);
}

Weight weight_from_json(const ShimuraDatum& d, const Json& j) {
  const Json& c = j.is_object() && j.contains("components") ? j["components"] : j;
  if (!c.is_object()) parse_fail("weight JSON must be {components: {id: [ints]}}");
  std::map<std::string, std::vector<Int>> comps;
  for (auto it = c.begin(); it != c.end(); ++it) {
    if (!it.value().is_array()) parse_fail("weight component must be a list");
    std::vector<Int> tuple;
    for (const auto& x : it.value()) tuple.push_back(as_int(x, "weight entry"));
    comps[it.key()] = tuple;
  }
  return make_weight(d, comps);
}

Json weight_to_json(const ShimuraDatum& d, const Weight& w) {
  Json comps = Json::object();
  for (const auto& tau : d.embeddings()) {
    Json arr = Json::array();
    for (Int x : w.at(tau)) arr.push_back(std::to_string(x));
    comps[tau] = arr;
  }
  return Json{{"components", comps}};
}

OperatorDescriptor parse_operator(const ShimuraDatum& d, const std::string& text) {
  std::string t = trim(text);
  auto open = t.find('(');
  std::string kind = trim(open == std::string::npos ? t : t.substr(0, open));
  std::string body;
  if (open != std::string::npos) {
    if (t.back() != ')') parse_fail("operator must end with ')'");
    body = t.substr(open + 1, t.size() - open - 2);
  }
  OperatorDescriptor op;
  static const std::map<std::string, OpKind> kinds{
      {"MaassShimura", OpKind::MaassShimura},       {"ThetaBasic", OpKind::ThetaBasic},
      {"Theta", OpKind::Theta},                     {"ThetaOMOL", OpKind::ThetaOMOL},
      {"ThetaTildeBasic", OpKind::ThetaTildeBasic}, {"ThetaTilde", OpKind::ThetaTilde},
      {"HasseMult", OpKind::HasseMult},             {"MuOrdinaryProjector", OpKind::MuOrdinaryProjector}};
  auto it = kinds.find(kind);
  if (it == kinds.end()) parse_fail("unknown operator kind '" + kind + "'");
  op.kind = it->second;
  if (trim(body).empty()) return op;
  for (const auto& arg : split_top(body, ',')) {
    auto eq = arg.find('=');
    if (eq == std::string::npos) parse_fail("operator argument '" + trim(arg) + "' lacks '='");
    std::string key = trim(arg.substr(0, eq));
    std::string val = trim(arg.substr(eq + 1));
    if (key == "sigma") {
      if (val == "all") {
        op.sigma = std::set<std::string>(d.embeddings().begin(), d.embeddings().end());
      } else {
        std::string inner = unbrace(val);
        if (!trim(inner).empty())
          for (const auto& id : split_top(inner, ',')) op.sigma.insert(trim(id));
      }
    } else if (key == "tbar") {
      op.tbar = val;
    } else if (key == "lambda") {
      op.lambda = parse_weight(d, unbrace(val));
    } else if (key == "variant") {
      if (val == "general") {
        op.variant = ThetaVariant::General;
      } else if (val == "allgood") {
        op.variant = ThetaVariant::AllGood;
      } else {
        parse_fail("variant must be general or allgood");
      }
    } else if (key == "b") {
      for (const auto& part : split_top(unbrace(val), ';')) {
        auto colon = part.find(':');
        if (colon == std::string::npos) parse_fail("b entries must be id:int");
        op.hasse_b[trim(part.substr(0, colon))] = parse_int_token(part.substr(colon + 1));
      }
    } else {
      parse_fail("unknown operator argument '" + key + "'");
    }
  }
  for (const auto& id : op.sigma)
    if (!d.contains(id)) throw Error(ErrorCode::UnknownEmbedding, id);
  for (const auto& [id, b] : op.hasse_b)
    if (!d.contains(id)) throw Error(ErrorCode::UnknownEmbedding, id);
  if (!op.tbar.empty() && !d.contains(op.tbar)) throw Error(ErrorCode::UnknownEmbedding, op.tbar);
  return op;
}

}  // namespace modtheta
