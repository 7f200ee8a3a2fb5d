#include "bspec/dsl.hpp"

#include <algorithm>
#include <set>

#include "bspec/synth.hpp"

namespace bspec::dsl {

std::string format_loc(const Loc& l) { return std::to_string(l.line) + ":" + std::to_string(l.col); }

const Entry* Block::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

std::size_t Document::count(std::string_view kind) const {
  return static_cast<std::size_t>(std::count_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.kind == kind; }));
}

std::vector<std::string> Workspace::names_of(std::string_view kind) const {
  std::vector<std::string> out;
  for (const auto& [k, n] : order)
    if (k == kind) out.push_back(n);
  return out;
}

namespace {

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
  static const std::map<std::string, std::vector<std::string>> m{
      {"setoid", {"elements", "equal"}},
      {"directed", {"elements", "equal", "setoid", "order", "closure"}},
      {"family", {"index", "direction", "carrier", "equal", "map", "closure"}},
      {"subbase", {"carrier", "elements", "equal", "gen"}},
      {"certificate", {"space", "target", "proof"}},
      {"spectrum", {"family", "space", "witness"}},
      {"specmap", {"source", "target", "comp", "cont"}},
      {"cofinal", {"index", "elements", "cof", "spectrum"}},
      {"cocone", {"spectrum", "apex", "leg", "witness"}},
      {"cone", {"spectrum", "apex", "leg", "witness"}},
      {"pool", {"spectrum", "space", "shape", "members", "member"}},
      {"suite", {"laws", "targets"}},
  };
  return m;
}

// keys that take an argument before ':'
bool keyed(std::string_view kind, std::string_view key) {
  static const std::set<std::pair<std::string_view, std::string_view>> k{
      {"family", "carrier"}, {"family", "equal"},  {"family", "map"},   {"subbase", "gen"},
      {"spectrum", "space"}, {"spectrum", "witness"}, {"specmap", "comp"}, {"specmap", "cont"},
      {"cocone", "leg"},     {"cocone", "witness"},  {"cone", "leg"},     {"cone", "witness"},
      {"pool", "member"}};
  return k.count({kind, key}) != 0;
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '*' || c == '-' ||
         c == '/' || c == '+';
}

[[noreturn]] void syntax(const Loc& l, const std::string& msg) { fail(ErrorKind::SyntaxError, format_loc(l) + ": " + msg); }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  Loc l;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++l.line;
        l.col = 1;
      } else {
        ++l.col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({TokKind::Punct, "\n", l});
      advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "=>" || text.substr(i, 2) == "<=") {
      out.push_back({TokKind::Punct, std::string(text.substr(i, 2)), l});
      advance(2);
      continue;
    }
    if (std::string_view("{}()[]:,=").find(c) != std::string_view::npos) {
      out.push_back({TokKind::Punct, std::string(1, c), l});
      advance(1);
      continue;
    }
    if (word_char(c)) {
      Loc start = l;
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      out.push_back({TokKind::Word, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    syntax(l, "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({TokKind::Punct, "", l});  // end of input
  return out;
}

std::string show_tok(const Token& t) {
  if (t.text.empty()) return "end of input";
  if (t.text == "\n") return "end of line";
  return "'" + t.text + "'";
}

std::string expected_set(const std::vector<std::string>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + xs[k];
  return s + "}";
}

[[noreturn]] void expected(const Token& t, const std::vector<std::string>& xs) {
  syntax(t.loc, "expected one of " + expected_set(xs) + ", got " + show_tok(t));
}

class Parser {
 public:
  explicit Parser(std::vector<Token> ts) : ts_(std::move(ts)) {}

  Document document() {
    Document d;
    skip_newlines();
    while (!at_end()) {
      d.blocks.push_back(block());
      skip_newlines();
    }
    return d;
  }

 private:
  std::vector<Token> ts_;
  std::size_t p_ = 0;

  const Token& peek() const { return ts_[p_]; }
  bool at_end() const { return ts_[p_].kind == TokKind::Punct && ts_[p_].text.empty(); }
  bool is(std::string_view text) const { return peek().kind == TokKind::Punct && peek().text == text; }
  void skip_newlines() {
    while (is("\n")) ++p_;
  }

  Block block() {
    const Token& k = peek();
    if (k.kind != TokKind::Word || !allowed_keys().count(k.text)) expected(k, block_kinds());
    Block b;
    b.kind = k.text;
    b.loc = k.loc;
    ++p_;
    if (peek().kind != TokKind::Word) expected(peek(), {"block name"});
    b.name = peek().text;
    ++p_;
    if (!is("{")) expected(peek(), {"'{'"});
    ++p_;
    const auto& keys = allowed_keys().at(b.kind);
    while (true) {
      skip_newlines();
      if (is("}")) {
        ++p_;
        break;
      }
      const Token& key = peek();
      if (key.kind != TokKind::Word || std::find(keys.begin(), keys.end(), key.text) == keys.end()) {
        std::vector<std::string> exp = keys;
        exp.push_back("'}'");
        expected(key, exp);
      }
      Entry e;
      e.key = key.text;
      e.loc = key.loc;
      ++p_;
      while (!is(":")) {
        const Token& t = peek();
        bool ok = keyed(b.kind, e.key) && (t.kind == TokKind::Word || t.text == "<=");
        if (!ok) expected(t, keyed(b.kind, e.key) ? std::vector<std::string>{"argument", "':'"} : std::vector<std::string>{"':'"});
        e.arg.push_back(t);
        ++p_;
      }
      if (keyed(b.kind, e.key) && e.arg.empty()) expected(peek(), {"argument"});
      ++p_;
      while (!is("\n") && !is("}") && !at_end()) {
        if (is("{") || is(":")) expected(peek(), {"value", "end of line"});
        e.value.push_back(peek());
        ++p_;
      }
      if (e.value.empty()) expected(peek(), {"value"});
      b.entries.push_back(std::move(e));
      if (at_end()) expected(peek(), {"'}'"});
    }
    if (!is("\n") && !at_end()) expected(peek(), {"end of line"});
    return b;
  }
};

}  // namespace

const std::vector<std::string>& block_kinds() {
  static const std::vector<std::string> k{"setoid",  "directed", "family", "subbase", "certificate", "spectrum",
                                          "specmap", "cofinal",  "cocone", "cone",    "pool",        "suite"};
  return k;
}

Document parse(std::string_view text) { return Parser(lex(text)).document(); }

std::string join_tokens(const std::vector<Token>& ts) {
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (k > 0) {
      const std::string& a = ts[k - 1].text;
      const std::string& b = ts[k].text;
      bool tight = a == "(" || a == "[" || b == ")" || b == "]" || b == "[" || b == "," || a == "=>" || b == "=>" ||
                   a == "<=" || b == "<=" || a == "=" || b == "=";
      if (!tight) out += ' ';
    }
    out += ts[k].text;
  }
  return out;
}

std::string print(const Document& d) {
  std::string out;
  for (std::size_t k = 0; k < d.blocks.size(); ++k) {
    const Block& b = d.blocks[k];
    if (k) out += "\n";
    out += b.kind + " " + b.name + " {\n";
    for (const auto& e : b.entries) {
      out += "  " + e.key;
      if (!e.arg.empty()) out += " " + join_tokens(e.arg);
      out += ": " + join_tokens(e.value) + "\n";
    }
    out += "}\n";
  }
  return out;
}

bool same_document(const Document& a, const Document& b) {
  auto texts = [](const std::vector<Token>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(t.text);
    return out;
  };
  if (a.blocks.size() != b.blocks.size()) return false;
  for (std::size_t k = 0; k < a.blocks.size(); ++k) {
    const Block& x = a.blocks[k];
    const Block& y = b.blocks[k];
    if (x.kind != y.kind || x.name != y.name || x.entries.size() != y.entries.size()) return false;
    for (std::size_t e = 0; e < x.entries.size(); ++e) {
      const Entry& p = x.entries[e];
      const Entry& q = y.entries[e];
      if (p.key != q.key || texts(p.arg) != texts(q.arg) || texts(p.value) != texts(q.value)) return false;
    }
  }
  return true;
}

namespace {

using Toks = std::vector<Token>;

[[noreturn]] void at(const Loc& l, ErrorKind k, const std::string& msg) { fail(k, format_loc(l) + ": " + msg); }

Rational rational_at(const Token& t) {
  auto q = t.kind == TokKind::Word ? parse_rational(t.text) : std::nullopt;
  if (!q) syntax(t.loc, "expected one of {rational}, got " + show_tok(t));
  return *q;
}

class SexprParser {
 public:
  using GenLookup = std::function<std::optional<std::size_t>(const std::string&)>;
  SexprParser(const Toks& ts, GenLookup gen) : ts_(ts), gen_(std::move(gen)) {}

  Cert cert() {
    open();
    const Token& h = word({"gen", "const", "add", "bic", "eq", "ulim", "neg", "sub", "scale", "mul", "max", "min"});
    Cert c;
    if (h.text == "gen") {
      const Token& n = word({"generator name"});
      auto k = gen_ ? gen_(n.text) : std::nullopt;
      if (!k) at(n.loc, ErrorKind::UnresolvedReference, "unknown generator '" + n.text + "'");
      c = cert::gen(*k);
    } else if (h.text == "const") {
      c = cert::constant(rational());
    } else if (h.text == "add" || h.text == "sub" || h.text == "mul" || h.text == "max" || h.text == "min") {
      Cert a = cert();
      Cert b = cert();
      c = h.text == "add"   ? cert::add(a, b)
          : h.text == "sub" ? cert::sub(a, b)
          : h.text == "mul" ? cert::mul(a, b)
          : h.text == "max" ? cert::max(a, b)
                            : cert::min(a, b);
    } else if (h.text == "bic") {
      Bic phi = bic();
      c = cert::bic(phi, cert());
    } else if (h.text == "neg") {
      c = cert::neg(cert());
    } else if (h.text == "scale") {
      Rational q = rational();
      c = cert::scale(q, cert());
    } else if (h.text == "eq") {
      Cert a = cert();
      c = cert::eq(a, table());
    } else {
      Values t = table();
      std::vector<std::pair<unsigned, Cert>> steps;
      while (is("(")) {
        open();
        word({"step"});
        const Token& n = word({"step number"});
        unsigned k = 0;
        try {
          k = static_cast<unsigned>(std::stoul(n.text));
        } catch (const std::exception&) {
          syntax(n.loc, "expected one of {step number}, got " + show_tok(n));
        }
        steps.emplace_back(k, cert());
        close();
      }
      c = cert::ulim(std::move(t), std::move(steps));
    }
    close();
    return c;
  }

  Bic bic() {
    if (peek().kind == TokKind::Word && peek().text == "id") {
      ++p_;
      return bic::id();
    }
    if (!is("(")) expected(peek(), {"id", "'('"});
    open();
    const Token& h = word({"const", "add", "mul", "neg", "abs", "max", "min", "comp"});
    Bic b;
    if (h.text == "const") {
      b = bic::constant(rational());
    } else if (h.text == "neg" || h.text == "abs") {
      Bic a = bic();
      b = h.text == "neg" ? bic::neg(a) : bic::abs(a);
    } else {
      Bic x = bic();
      Bic y = bic();
      b = h.text == "add"   ? bic::add(x, y)
          : h.text == "mul" ? bic::mul(x, y)
          : h.text == "max" ? bic::max(x, y)
          : h.text == "min" ? bic::min(x, y)
                            : bic::comp(x, y);
    }
    close();
    return b;
  }

  void finish() {
    if (p_ != ts_.size()) expected(ts_[p_], {"end of expression"});
  }

 private:
  const Toks& ts_;
  GenLookup gen_;
  std::size_t p_ = 0;

  const Token& peek() const {
    static const Token end{TokKind::Punct, "", {}};
    if (p_ < ts_.size()) return ts_[p_];
    return ts_.empty() ? end : ts_.back();
  }
  bool is(std::string_view t) const { return p_ < ts_.size() && ts_[p_].kind == TokKind::Punct && ts_[p_].text == t; }
  void open() {
    if (!is("(")) expected(p_ < ts_.size() ? ts_[p_] : Token{TokKind::Punct, "", peek().loc}, {"'('"});
    ++p_;
  }
  void close() {
    if (!is(")")) expected(p_ < ts_.size() ? ts_[p_] : Token{TokKind::Punct, "", peek().loc}, {"')'"});
    ++p_;
  }
  const Token& word(const std::vector<std::string>& allowed) {
    if (p_ >= ts_.size()) expected(Token{TokKind::Punct, "", peek().loc}, allowed);
    const Token& t = ts_[p_];
    bool ok = t.kind == TokKind::Word;
    if (ok && allowed.size() > 1) ok = std::find(allowed.begin(), allowed.end(), t.text) != allowed.end();
    if (ok && allowed.size() == 1 && allowed[0] == "step") ok = t.text == "step";
    if (!ok) expected(t, allowed);
    ++p_;
    return t;
  }
  Rational rational() {
    if (p_ >= ts_.size()) expected(Token{TokKind::Punct, "", peek().loc}, {"rational"});
    return rational_at(ts_[p_++]);
  }
  Values table() {
    open();
    word({"table"});
    Values v;
    while (!is(")")) v.push_back(rational());
    close();
    return v;
  }
};

Toks lex_expr(std::string_view text) {
  Toks ts = lex(text);
  ts.pop_back();
  ts.erase(std::remove_if(ts.begin(), ts.end(), [](const Token& t) { return t.text == "\n"; }), ts.end());
  return ts;
}

}  // namespace

Cert parse_certificate(std::string_view text, const std::function<std::optional<std::size_t>(const std::string&)>& gen) {
  Toks ts = lex_expr(text);
  SexprParser p(ts, gen);
  Cert c = p.cert();
  p.finish();
  return c;
}

Bic parse_bic(std::string_view text) {
  Toks ts = lex_expr(text);
  SexprParser p(ts, nullptr);
  Bic b = p.bic();
  p.finish();
  return b;
}

namespace {

// Splits at top-level commas.
std::vector<Toks> items(const Toks& ts) {
  std::vector<Toks> out(1);
  int depth = 0;
  for (const auto& t : ts) {
    if (t.kind == TokKind::Punct && (t.text == "(" || t.text == "[")) ++depth;
    if (t.kind == TokKind::Punct && (t.text == ")" || t.text == "]")) --depth;
    if (depth == 0 && t.kind == TokKind::Punct && t.text == ",") {
      out.emplace_back();
      continue;
    }
    out.back().push_back(t);
  }
  for (const auto& i : out)
    if (i.empty()) syntax(ts.front().loc, "empty list item");
  return out;
}

const Token& single_word(const Toks& ts, const std::string& what) {
  if (ts.size() != 1 || ts[0].kind != TokKind::Word) expected(ts.size() > 1 ? ts[1] : ts[0], {what});
  return ts[0];
}

std::vector<std::string> word_list(const Entry& e, const std::string& what) {
  std::vector<std::string> out;
  for (const auto& i : items(e.value)) out.push_back(single_word(i, what).text);
  return out;
}

// a <op> b
std::pair<Token, Toks> split_pair(const Toks& item, std::string_view op) {
  if (item.size() < 3 || item[0].kind != TokKind::Word || item[1].text != op)
    expected(item.size() > 1 ? item[1] : item[0], {"'" + std::string(op) + "'"});
  return {item[0], Toks(item.begin() + 2, item.end())};
}

NamePairs pair_list(const Entry& e, std::string_view op) {
  NamePairs out;
  for (const auto& i : items(e.value)) {
    auto [a, rest] = split_pair(i, op);
    out.emplace_back(a.text, single_word(rest, "element name").text);
  }
  return out;
}

std::string arg_word(const Entry& e) { return single_word(e.arg, "argument").text; }

std::pair<std::string, std::string> arg_edge(const Entry& e) {
  if (e.arg.size() != 3 || e.arg[1].text != "<=") expected(e.arg.size() > 1 ? e.arg[1] : e.arg[0], {"i<=j"});
  return {e.arg[0].text, e.arg[2].text};
}

class Builder {
 public:
  Builder(const Document& d, std::size_t bound) : doc_(d), bound_(bound) {}

  Workspace run() {
    std::set<std::string> seen;
    for (const auto& b : doc_.blocks) {
      if (!seen.insert(b.name).second) at(b.loc, ErrorKind::DuplicateElement, "name '" + b.name + "' declared twice");
      cur_ = &b;
      try {
        build(b);
      } catch (const Error& e) {
        std::string msg = e.what();
        auto colon = msg.find(": ");
        std::string body = colon == std::string::npos ? msg : msg.substr(colon + 2);
        if (body.empty() || !std::isdigit(static_cast<unsigned char>(body[0])))
          body = format_loc(loc_ ? *loc_ : b.loc) + ": " + body;
        throw Error(e.kind(), body);
      }
      ws_.order.emplace_back(b.kind, b.name);
    }
    return std::move(ws_);
  }

 private:
  const Document& doc_;
  std::size_t bound_;
  Workspace ws_;
  const Block* cur_ = nullptr;
  std::optional<Loc> loc_;

  const Entry& need(const Block& b, std::string_view key) {
    const Entry* e = b.find(key);
    if (!e) at(b.loc, ErrorKind::TypeMismatch, b.kind + " " + b.name + " needs '" + std::string(key) + "'");
    loc_ = e->loc;
    return *e;
  }

  template <class M>
  const typename M::mapped_type& ref(const M& m, const Token& t, const std::string& kind) {
    auto it = m.find(t.text);
    if (it == m.end()) {
      bool other = false;
      for (const auto& [k, n] : ws_.order) other = other || n == t.text;
      if (other) at(t.loc, ErrorKind::TypeMismatch, "'" + t.text + "' is not a " + kind);
      at(t.loc, ErrorKind::UnresolvedReference, "unknown " + kind + " '" + t.text + "'");
    }
    return it->second;
  }

  template <class M>
  const typename M::mapped_type& ref_entry(const Block& b, std::string_view key, const M& m, const std::string& kind) {
    const Entry& e = need(b, key);
    return ref(m, single_word(e.value, kind + " name"), kind);
  }

  std::string ref_name(const Block& b, std::string_view key) { return single_word(need(b, key).value, "name").text; }

  std::size_t element(const Setoid& s, const Token& t) {
    auto k = s.find(t.text);
    if (!k) at(t.loc, ErrorKind::UnknownElement, "'" + t.text + "' is not an element of {" + join(s.names()) + "}");
    return *k;
  }

  static std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + xs[k];
    return s;
  }

  Setoid inline_setoid(const Block& b) {
    const Entry& el = need(b, "elements");
    std::vector<std::string> names = word_list(el, "element name");
    NamePairs eq;
    if (const Entry* e = b.find("equal")) {
      loc_ = e->loc;
      eq = pair_list(*e, "=");
    }
    return Setoid::make(names, eq);
  }

  SetoidFn table_fn(const Entry& e, const Setoid& dom, const Setoid& cod) {
    loc_ = e.loc;
    SetoidFn f{dom, cod, std::vector<std::size_t>(dom.size(), cod.size())};
    for (const auto& i : items(e.value)) {
      auto [a, rest] = split_pair(i, "=>");
      f.map[element(dom, a)] = element(cod, single_word(rest, "element name"));
    }
    for (std::size_t x = 0; x < dom.size(); ++x)
      if (f.map[x] == cod.size()) at(e.loc, ErrorKind::TypeMismatch, "no image given for '" + dom.name(x) + "'");
    require_extensional(f, "map");
    return f;
  }

  Values value_table(const Entry& e, const Setoid& dom) {
    loc_ = e.loc;
    std::vector<std::optional<Rational>> v(dom.size());
    for (const auto& i : items(e.value)) {
      auto [a, rest] = split_pair(i, "=>");
      std::size_t x = element(dom, a);
      if (rest.size() != 1) expected(rest.size() > 1 ? rest[1] : rest[0], {"rational"});
      v[x] = rational_at(rest[0]);
    }
    Values out;
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (!v[x]) at(e.loc, ErrorKind::TypeMismatch, "no value given for '" + dom.name(x) + "'");
      out.push_back(*v[x]);
    }
    return out;
  }

  static std::function<std::optional<std::size_t>(const std::string&)> gen_lookup(const BSpace& b) {
    return [&b](const std::string& n) -> std::optional<std::size_t> {
      for (std::size_t k = 0; k < b.gens.size(); ++k)
        if (b.gen_name(k) == n) return k;
      return std::nullopt;
    };
  }

  Cert cert_tokens(const Toks& ts, const BSpace& src) {
    SexprParser p(ts, gen_lookup(src));
    Cert c = p.cert();
    p.finish();
    return c;
  }

  bool is_auto(const Toks& ts) { return ts.size() == 1 && ts[0].text == "auto"; }

  // Certificates for every dst generator; unnamed ones are synthesized.
  MorphismWitness witness(const Entry* e, const BSpace& src, const BSpace& dst, const SetoidFn& h) {
    MorphismWitness w{h, std::vector<Cert>(dst.gens.size())};
    if (e && !is_auto(e->value)) {
      loc_ = e->loc;
      for (const auto& i : items(e->value)) {
        auto [g, rest] = split_pair(i, "=>");
        auto k = gen_lookup(dst)(g.text);
        if (!k) at(g.loc, ErrorKind::UnresolvedReference, "unknown generator '" + g.text + "'");
        w.certs[*k] = cert_tokens(rest, src);
      }
    }
    for (std::size_t k = 0; k < dst.gens.size(); ++k)
      if (!w.certs[k]) {
        auto c = synthesize_certificate(src, pull_back(dst.gens[k], h));
        if (!c) at(e ? e->loc : cur_->loc, ErrorKind::MissingCertificate, "no certificate found for " + dst.gen_name(k));
        w.certs[k] = *c;
      }
    return w;
  }

  void build(const Block& b) {
    loc_.reset();
    const std::string& k = b.kind;
    if (k == "setoid") ws_.setoids.emplace(b.name, inline_setoid(b));
    else if (k == "directed") directed(b);
    else if (k == "family") family(b);
    else if (k == "subbase") subbase(b);
    else if (k == "certificate") certificate(b);
    else if (k == "spectrum") spectrum(b);
    else if (k == "specmap") specmap(b);
    else if (k == "cofinal") cofinal(b);
    else if (k == "cocone" || k == "cone") cocone(b);
    else if (k == "pool") pool(b);
    else if (k == "suite") suite(b);
  }

  void directed(const Block& b) {
    Setoid base = b.find("setoid") ? ref_entry(b, "setoid", ws_.setoids, "setoid") : inline_setoid(b);
    NamePairs order;
    if (const Entry* e = b.find("order")) {
      loc_ = e->loc;
      for (const auto& i : items(e->value)) {
        auto [x, rest] = split_pair(i, "<=");
        element(base, x);
        order.emplace_back(x.text, base.name(element(base, single_word(rest, "element name"))));
      }
    }
    bool closure = true;
    if (const Entry* e = b.find("closure")) {
      loc_ = e->loc;
      const Token& t = single_word(e->value, "auto");
      if (t.text != "auto" && t.text != "off") expected(t, {"auto", "off"});
      closure = t.text == "auto";
    }
    ws_.indices.emplace(b.name, make_directed(base, order, closure));
  }

  void family(const Block& b) {
    const DirectedIndex& d = ref_entry(b, "index", ws_.indices, "directed index");
    Direction dir = Direction::covariant;
    if (const Entry* e = b.find("direction")) {
      loc_ = e->loc;
      const Token& t = single_word(e->value, "direction");
      if (t.text != "covariant" && t.text != "contravariant") expected(t, {"covariant", "contravariant"});
      dir = t.text == "covariant" ? Direction::covariant : Direction::contravariant;
    }
    std::vector<std::optional<Setoid>> car(d.size());
    std::vector<NamePairs> eqs(d.size());
    for (const auto& e : b.entries)
      if (e.key == "equal") {
        loc_ = e.loc;
        eqs[element(d.base, single_word(e.arg, "index element"))] = pair_list(e, "=");
      }
    for (const auto& e : b.entries)
      if (e.key == "carrier") {
        loc_ = e.loc;
        std::size_t i = element(d.base, single_word(e.arg, "index element"));
        car[i] = Setoid::make(word_list(e, "element name"), eqs[i]);
      }
    std::vector<Setoid> carriers;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!car[i]) at(b.loc, ErrorKind::TypeMismatch, "no carrier for index element '" + d.name(i) + "'");
      carriers.push_back(*car[i]);
    }
    std::vector<Edge> edges;
    for (const auto& e : b.entries)
      if (e.key == "map") {
        loc_ = e.loc;
        auto [si, sj] = arg_edge(e);
        std::size_t i = element(d.base, e.arg[0]), j = element(d.base, e.arg[2]);
        if (!d.leq(i, j)) at(e.loc, ErrorKind::TypeMismatch, "'" + si + "<=" + sj + "' is not in the order");
        const Setoid& from = dir == Direction::covariant ? carriers[i] : carriers[j];
        const Setoid& to = dir == Direction::covariant ? carriers[j] : carriers[i];
        edges.push_back({i, j, table_fn(e, from, to)});
      }
    bool closure = true;
    if (const Entry* e = b.find("closure")) {
      loc_ = e->loc;
      const Token& t = single_word(e->value, "auto");
      if (t.text != "auto" && t.text != "off") expected(t, {"auto", "off"});
      closure = t.text == "auto";
    }
    loc_.reset();
    ws_.families.emplace(b.name, make_direct_family(d, dir, carriers, edges, closure));
  }

  Setoid carrier_ref(const Entry& e) {
    loc_ = e.loc;
    const Toks& v = e.value;
    if (v.size() == 4 && v[1].text == "[" && v[3].text == "]") {
      const DirectFamily& f = ref(ws_.families, v[0], "family");
      return f.carriers[element(f.index.base, v[2])];
    }
    return ref(ws_.setoids, single_word(v, "setoid name"), "setoid");
  }

  void subbase(const Block& b) {
    Setoid c = b.find("carrier") ? carrier_ref(*b.find("carrier")) : inline_setoid(b);
    std::vector<Values> gens;
    std::vector<std::string> names;
    for (const auto& e : b.entries)
      if (e.key == "gen") {
        names.push_back(arg_word(e));
        if (std::count(names.begin(), names.end(), names.back()) > 1)
          at(e.loc, ErrorKind::DuplicateElement, "generator '" + names.back() + "' declared twice");
        gens.push_back(value_table(e, c));
      }
    ws_.spaces.emplace(b.name, make_space(c, std::move(gens), std::move(names)));
  }

  void certificate(const Block& b) {
    const BSpace& s = ref_entry(b, "space", ws_.spaces, "subbase");
    Values target = value_table(need(b, "target"), s.carrier);
    const Entry& p = need(b, "proof");
    Cert c;
    if (is_auto(p.value)) {
      auto found = synthesize_certificate(s, target);
      if (!found) at(p.loc, ErrorKind::MissingCertificate, "no certificate found");
      c = *found;
    } else {
      c = cert_tokens(p.value, s);
    }
    ws_.certificates.emplace(b.name, CertificateDecl{ref_name(b, "space"), std::move(target), std::move(c)});
  }

  void spectrum(const Block& b) {
    const DirectFamily& f = ref_entry(b, "family", ws_.families, "family");
    const DirectedIndex& d = f.index;
    std::vector<std::optional<BSpace>> sp(d.size());
    for (const auto& e : b.entries)
      if (e.key == "space") {
        loc_ = e.loc;
        std::size_t i = element(d.base, single_word(e.arg, "index element"));
        const BSpace& s = ref(ws_.spaces, single_word(e.value, "subbase name"), "subbase");
        if (!s.carrier.same_as(f.carriers[i]))
          at(e.loc, ErrorKind::TypeMismatch, "subbase carrier differs from the carrier at '" + d.name(i) + "'");
        sp[i] = s;
      }
    std::vector<BSpace> spaces;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!sp[i]) at(b.loc, ErrorKind::TypeMismatch, "no space for index element '" + d.name(i) + "'");
      spaces.push_back(*sp[i]);
    }
    std::vector<EdgeWitness> given;
    bool cov = f.dir == Direction::covariant;
    for (const auto& e : b.entries)
      if (e.key == "witness") {
        loc_ = e.loc;
        arg_edge(e);
        std::size_t i = element(d.base, e.arg[0]), j = element(d.base, e.arg[2]);
        if (!d.leq(i, j)) at(e.loc, ErrorKind::TypeMismatch, "edge is not in the order");
        given.push_back({i, j, witness(&e, cov ? spaces[i] : spaces[j], cov ? spaces[j] : spaces[i], f.transport(i, j))});
      }
    loc_.reset();
    ws_.spectra.emplace(b.name, make_spectrum(f, std::move(spaces), given));
  }

  void specmap(const Block& b) {
    const Spectrum& s = ref_entry(b, "source", ws_.spectra, "spectrum");
    const Spectrum& t = ref_entry(b, "target", ws_.spectra, "spectrum");
    if (s.size() != t.size() || !s.index().base.same_as(t.index().base) || s.fam.dir != t.fam.dir)
      at(b.loc, ErrorKind::TypeMismatch, "source and target differ in index or direction");
    const DirectedIndex& d = s.index();
    std::vector<std::optional<SetoidFn>> comps(d.size());
    for (const auto& e : b.entries)
      if (e.key == "comp") {
        loc_ = e.loc;
        std::size_t i = element(d.base, single_word(e.arg, "index element"));
        comps[i] = table_fn(e, s.fam.carriers[i], t.fam.carriers[i]);
      }
    SpectrumMap m{s, t, {}, std::vector<MorphismWitness>{}};
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!comps[i]) at(b.loc, ErrorKind::TypeMismatch, "no component at '" + d.name(i) + "'");
      m.comps.push_back(*comps[i]);
      const Entry* ce = nullptr;
      for (const auto& e : b.entries)
        if (e.key == "cont" && element(d.base, single_word(e.arg, "index element")) == i) ce = &e;
      m.cont->push_back(witness(ce, s.spaces[i], t.spaces[i], *comps[i]));
    }
    ws_.maps.emplace(b.name, SpecMapDecl{ref_name(b, "source"), ref_name(b, "target"), std::move(m)});
  }

  void cofinal(const Block& b) {
    const DirectedIndex& d = ref_entry(b, "index", ws_.indices, "directed index");
    std::optional<std::string> spec;
    if (b.find("spectrum")) {
      const Spectrum& s = ref_entry(b, "spectrum", ws_.spectra, "spectrum");
      if (!s.index().base.same_as(d.base)) at(loc_ ? *loc_ : b.loc, ErrorKind::TypeMismatch, "spectrum over another index");
      spec = ref_name(b, "spectrum");
    }
    const Entry& el = need(b, "elements");
    std::vector<std::string> names = word_list(el, "index element");
    Setoid j = Setoid::discrete(names);
    SetoidFn e{j, d.base, {}};
    for (const auto& t : items(el.value)) e.map.push_back(element(d.base, t[0]));
    SetoidFn cof = table_fn(need(b, "cof"), d.base, j);
    ws_.cofinals.emplace(b.name, CofinalDecl{ref_name(b, "index"), spec, CofinalSubset{j, e, cof}});
  }

  void cocone(const Block& b) {
    bool co = b.kind == "cocone";
    const Spectrum& s = ref_entry(b, "spectrum", ws_.spectra, "spectrum");
    if ((s.fam.dir == Direction::covariant) != co)
      at(loc_ ? *loc_ : b.loc, ErrorKind::FlavorMismatch, std::string(co ? "cocone" : "cone") + " over a " +
                                                              std::string(to_string(s.fam.dir)) + " spectrum");
    const BSpace& apex = ref_entry(b, "apex", ws_.spaces, "subbase");
    const DirectedIndex& d = s.index();
    std::vector<MorphismWitness> legs;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Entry* le = nullptr;
      const Entry* we = nullptr;
      for (const auto& e : b.entries) {
        if (e.key != "leg" && e.key != "witness") continue;
        loc_ = e.loc;
        if (element(d.base, single_word(e.arg, "index element")) != i) continue;
        (e.key == "leg" ? le : we) = &e;
      }
      if (!le) at(b.loc, ErrorKind::TypeMismatch, "no leg at '" + d.name(i) + "'");
      if (co) legs.push_back(witness(we, s.spaces[i], apex, table_fn(*le, s.fam.carriers[i], apex.carrier)));
      else legs.push_back(witness(we, apex, s.spaces[i], table_fn(*le, apex.carrier, s.fam.carriers[i])));
    }
    if (co) ws_.cocones.emplace(b.name, CoconeDecl{ref_name(b, "spectrum"), Cocone{apex, std::move(legs)}});
    else ws_.cones.emplace(b.name, ConeDecl{ref_name(b, "spectrum"), Cone{apex, std::move(legs)}});
  }

  void pool(const Block& b) {
    const Spectrum& s = ref_entry(b, "spectrum", ws_.spectra, "spectrum");
    const BSpace& f = ref_entry(b, "space", ws_.spaces, "subbase");
    const Entry& se = need(b, "shape");
    const Token& st = single_word(se.value, "shape");
    auto shape = parse_shape(st.text);
    if (!shape) expected(st, {"A_i", "A_ii", "B_i", "B_ii"});
    bool into = *shape == Shape::A_i || *shape == Shape::B_i;
    PoolDecl p{ref_name(b, "spectrum"), ref_name(b, "space"), *shape, {}};
    if (const Entry* e = b.find("members")) {
      loc_ = e->loc;
      const Token& t = single_word(e->value, "all");
      if (t.text != "all") expected(t, {"all"});
      p.members = generate_pools(s, f, *shape, bound_);
    } else {
      p.members.resize(s.size());
    }
    for (const auto& e : b.entries)
      if (e.key == "member") {
        loc_ = e.loc;
        std::size_t i = element(s.index().base, single_word(e.arg, "index element"));
        const BSpace& src = into ? s.spaces[i] : f;
        const BSpace& dst = into ? f : s.spaces[i];
        SetoidFn h = table_fn(e, src.carrier, dst.carrier);
        auto w = auto_witness(src, dst, h);
        if (!w) at(e.loc, ErrorKind::MissingCertificate, "member is not certified as a morphism");
        p.members[i].push_back(std::move(*w));
      }
    ws_.pools.emplace(b.name, std::move(p));
  }

  void suite(const Block& b) {
    SuiteDecl s;
    if (const Entry* e = b.find("laws")) s.laws = word_list(*e, "law group");
    if (const Entry* e = b.find("targets")) {
      for (const auto& i : items(e->value)) {
        const Token& t = single_word(i, "name");
        bool found = false;
        for (const auto& [k, n] : ws_.order) found = found || n == t.text;
        if (!found) at(t.loc, ErrorKind::UnresolvedReference, "unknown target '" + t.text + "'");
        s.targets.push_back(t.text);
      }
    }
    ws_.suites.emplace(b.name, std::move(s));
  }
};

}  // namespace

Workspace build(const Document& d, std::size_t enum_bound) { return Builder(d, enum_bound).run(); }

}  // namespace bspec::dsl
