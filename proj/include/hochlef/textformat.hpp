#pragma once
// Line-oriented structured text format for definition files: stanzas opened
// by a bracketed header, followed by key = value fields.  Values are
// integers, identifiers, quoted strings, or single-line arrays of those.
// Exact rationals travel as quoted "num/den" strings; the grammar has no
// floating-point literals.

#include <string>
#include <vector>

#include <hochlef/field.hpp>

namespace hochlef {

struct TextValue {
  bool is_int = false;
  long long num = 0;
  std::string text;  // identifier or quoted-string payload

  std::string show() const { return is_int ? std::to_string(num) : text; }
};

struct TextField {
  std::string key;
  bool is_array = false;
  std::vector<TextValue> items;
  int line = 0;
};

struct TextStanza {
  std::string kind;
  std::vector<TextField> fields;
  int line = 0;

  const TextField* find(const std::string& key) const {
    for (const auto& f : fields)
      if (f.key == key) return &f;
    return nullptr;
  }

  std::vector<const TextField*> all(const std::string& key) const {
    std::vector<const TextField*> out;
    for (const auto& f : fields)
      if (f.key == key) out.push_back(&f);
    return out;
  }
};

struct TextDocument {
  std::vector<TextStanza> stanzas;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' || c == ':';
}

inline TextValue parse_scalar(const std::string& tok, int line) {
  const std::string where = "line " + std::to_string(line) + ": ";
  if (tok.empty()) throw error(where + "empty value");
  TextValue v;
  if (tok.front() == '"') {
    if (tok.size() < 2 || tok.back() != '"')
      throw error(where + "unterminated string");
    v.text = tok.substr(1, tok.size() - 2);
    if (v.text.find('"') != std::string::npos)
      throw error(where + "malformed string");
    return v;
  }
  bool numeric = tok[0] == '-' ? tok.size() > 1 : true;
  for (std::size_t i = (tok[0] == '-' ? 1 : 0); i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') numeric = false;
  if (numeric) {
    v.is_int = true;
    try {
      v.num = std::stoll(tok);
    } catch (const std::exception&) {
      throw error(where + "integer out of range: " + tok);
    }
    return v;
  }
  for (char c : tok)
    if (!ident_char(c)) throw error(where + "malformed value: " + tok);
  if (tok[0] >= '0' && tok[0] <= '9')
    throw error(where + "malformed value: " + tok);
  v.text = tok;
  return v;
}

inline std::vector<std::string> split_items(const std::string& body, int line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : body) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw error("line " + std::to_string(line) + ": unterminated string");
  std::string last = trim(cur);
  if (!last.empty()) out.push_back(last);
  for (const auto& item : out)
    if (item.empty())
      throw error("line " + std::to_string(line) + ": empty array element");
  return out;
}

}  // namespace detail

inline TextDocument parse_text_document(const std::string& content) {
  TextDocument doc;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string raw = nl == std::string::npos
                          ? content.substr(pos)
                          : content.substr(pos, nl - pos);
    pos = nl == std::string::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::string line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw error(where + "malformed stanza header");
      std::string kind = detail::trim(line.substr(1, line.size() - 2));
      if (kind.empty()) throw error(where + "empty stanza header");
      for (char c : kind)
        if (!detail::ident_char(c))
          throw error(where + "malformed stanza header");
      TextStanza s;
      s.kind = kind;
      s.line = line_no;
      doc.stanzas.push_back(std::move(s));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw error(where + "expected key = value");
    if (doc.stanzas.empty())
      throw error(where + "field outside of a stanza");
    TextField f;
    f.key = detail::trim(line.substr(0, eq));
    f.line = line_no;
    if (f.key.empty()) throw error(where + "empty key");
    for (char c : f.key)
      if (!detail::ident_char(c)) throw error(where + "malformed key: " + f.key);
    std::string value = detail::trim(line.substr(eq + 1));
    if (value.empty()) throw error(where + "empty value");
    if (value.front() == '[') {
      if (value.back() != ']') throw error(where + "unterminated array");
      f.is_array = true;
      for (const auto& tok :
           detail::split_items(value.substr(1, value.size() - 2), line_no))
        f.items.push_back(detail::parse_scalar(tok, line_no));
    } else {
      f.items.push_back(detail::parse_scalar(value, line_no));
    }
    doc.stanzas.back().fields.push_back(std::move(f));
  }
  return doc;
}

}  // namespace hochlef
