#pragma once

#include <map>

#include "bspec/duality.hpp"

namespace bspec::dsl {

struct Loc {
  std::size_t line = 1;
  std::size_t col = 1;
};

std::string format_loc(const Loc& l);

enum class TokKind { Word, Punct };

struct Token {
  TokKind kind;
  std::string text;
  Loc loc;
};

struct Entry {
  std::string key;
  std::vector<Token> arg;  // tokens between key and ':'
  std::vector<Token> value;
  Loc loc;
};

struct Block {
  std::string kind;
  std::string name;
  std::vector<Entry> entries;
  Loc loc;

  const Entry* find(std::string_view key) const;
};

struct Document {
  std::vector<Block> blocks;

  std::size_t count(std::string_view kind) const;
};

const std::vector<std::string>& block_kinds();

// Throws SyntaxError with "line:col: expected ..., got ...".
Document parse(std::string_view text);
std::string print(const Document& d);
std::string join_tokens(const std::vector<Token>& ts);
// Same blocks, names, keys and token texts.
bool same_document(const Document& a, const Document& b);

// Parses a certificate s-expression; gen names are resolved by lookup.
Cert parse_certificate(std::string_view text, const std::function<std::optional<std::size_t>(const std::string&)>& gen);
Bic parse_bic(std::string_view text);

struct CertificateDecl {
  std::string space;
  Values target;
  Cert proof;
};

struct SpecMapDecl {
  std::string source;
  std::string target;
  SpectrumMap map;
};

struct CofinalDecl {
  std::string index;
  std::optional<std::string> spectrum;
  CofinalSubset subset;
};

struct CoconeDecl {
  std::string spectrum;
  Cocone cocone;
};

struct ConeDecl {
  std::string spectrum;
  Cone cone;
};

struct PoolDecl {
  std::string spectrum;
  std::string space;
  Shape shape = Shape::A_i;
  std::vector<std::vector<MorphismWitness>> members;
};

struct SuiteDecl {
  std::vector<std::string> laws;
  std::vector<std::string> targets;
};

struct Workspace {
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name) in document order
  std::map<std::string, Setoid> setoids;
  std::map<std::string, DirectedIndex> indices;
  std::map<std::string, DirectFamily> families;
  std::map<std::string, BSpace> spaces;
  std::map<std::string, CertificateDecl> certificates;
  std::map<std::string, Spectrum> spectra;
  std::map<std::string, SpecMapDecl> maps;
  std::map<std::string, CofinalDecl> cofinals;
  std::map<std::string, CoconeDecl> cocones;
  std::map<std::string, ConeDecl> cones;
  std::map<std::string, PoolDecl> pools;
  std::map<std::string, SuiteDecl> suites;

  std::vector<std::string> names_of(std::string_view kind) const;
};

// Resolves references. Throws UnresolvedReference or TypeMismatch with the
// location of the offending entry; library errors are prefixed likewise.
Workspace build(const Document& d, std::size_t enum_bound = 1000000);

}  // namespace bspec::dsl
