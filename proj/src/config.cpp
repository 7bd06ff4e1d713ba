#include "ncergo/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ncergo {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, 0, "cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

KeyValueConfig KeyValueConfig::parse_text(std::string_view text, const std::string& source_name) {
  KeyValueConfig out;
  out.source_ = source_name;
  std::string current_section;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    ++line_no;
    const size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (!line.empty()) {
      if (line.front() == '[') {
        if (line.back() != ']') {
          throw ConfigError(source_name, line_no, static_cast<int>(line.size()),
                            "unterminated section header");
        }
        current_section = trim(std::string_view(line).substr(1, line.size() - 2));
        if (current_section.empty()) {
          throw ConfigError(source_name, line_no, 1, "empty section name");
        }
      } else {
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
          throw ConfigError(source_name, line_no, 1, "expected 'key = value'");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ConfigError(source_name, line_no, 1, "empty key");
        if (current_section.empty()) {
          throw ConfigError(source_name, line_no, 1, "entry before any [section]");
        }
        auto [it, inserted] =
            out.sections_[current_section].emplace(key, Entry{value, line_no});
        if (!inserted) {
          throw ConfigError(source_name, line_no, 1,
                            "duplicate key '" + key + "' in [" + current_section + "]");
        }
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

bool KeyValueConfig::has(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

std::string KeyValueConfig::get(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  if (s != sections_.end()) {
    const auto k = s->second.find(key);
    if (k != s->second.end()) return k->second.value;
  }
  throw ConfigError(source_, 0, 0, "missing entry '" + key + "' in section [" + section + "]");
}

std::string KeyValueConfig::get_or(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

int KeyValueConfig::line_of(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  if (s != sections_.end()) {
    const auto k = s->second.find(key);
    if (k != s->second.end()) return k->second.line;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Observable grammars

namespace {

struct TokenCursor {
  std::vector<std::string> tokens;

  explicit TokenCursor(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
};

int parse_exponent_token(const std::string& token, char letter) {
  if (token.size() < 3 || token[0] != letter || token[1] != '^') {
    throw std::invalid_argument(std::string("expected ") + letter + "^INT, got '" + token + "'");
  }
  size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(token.substr(2), &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad exponent in '" + token + "'");
  }
  if (consumed + 2 != token.size()) {
    throw std::invalid_argument("trailing characters in '" + token + "'");
  }
  return value;
}

}  // namespace

Monomial parse_torus_monomial(std::string_view text) {
  TokenCursor cur(text);
  if (cur.tokens.size() != 2) {
    throw std::invalid_argument("torus monomial must be 'u^INT v^INT': '" + std::string(text) +
                                "'");
  }
  return Monomial{parse_exponent_token(cur.tokens[0], 'u'),
                  parse_exponent_token(cur.tokens[1], 'v')};
}

TensorMonomial parse_tensor_monomial(std::string_view text) {
  TokenCursor cur(text);
  if (cur.tokens.size() != 4) {
    throw std::invalid_argument("tensor monomial must be 'u^INT v^INT w^INT z^INT': '" +
                                std::string(text) + "'");
  }
  return TensorMonomial{
      parse_exponent_token(cur.tokens[0], 'u'), parse_exponent_token(cur.tokens[1], 'v'),
      parse_exponent_token(cur.tokens[2], 'w'), parse_exponent_token(cur.tokens[3], 'z')};
}

namespace {

Letter parse_letter(const std::string& token) {
  if (token.empty() || (token[0] != 's' && token[0] != 't')) {
    throw std::invalid_argument("letters are s<index> or t<index>, got '" + token + "'");
  }
  const int family = token[0] == 's' ? 1 : 2;
  int sign = +1;
  std::string body = token.substr(1);
  const size_t caret = body.find('^');
  if (caret != std::string::npos) {
    if (body.substr(caret) != "^-1") {
      throw std::invalid_argument("only ^-1 powers are allowed, got '" + token + "'");
    }
    sign = -1;
    body = body.substr(0, caret);
  }
  size_t consumed = 0;
  long index = 0;
  try {
    index = std::stol(body, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad letter index in '" + token + "'");
  }
  if (consumed != body.size()) {
    throw std::invalid_argument("trailing characters in '" + token + "'");
  }
  if (family == 1 && index < 1) {
    throw std::invalid_argument("finite-alphabet indices start at 1: '" + token + "'");
  }
  return Letter{family, index, sign};
}

}  // namespace

Word parse_word(std::string_view text) {
  TokenCursor cur(text);
  std::vector<Letter> letters;
  letters.reserve(cur.tokens.size());
  for (const std::string& token : cur.tokens) {
    if (token == "e") continue;  // identity
    letters.push_back(parse_letter(token));
  }
  return Word(std::move(letters));
}

std::vector<std::vector<long>> parse_cycles(std::string_view text) {
  std::vector<std::vector<long>> cycles;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle list");
    const size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    TokenCursor cur(text.substr(pos + 1, close - pos - 1));
    std::vector<long> cycle;
    for (const std::string& token : cur.tokens) {
      const Letter l = parse_letter(token);
      if (l.family != 1 || l.sign != 1) {
        throw std::invalid_argument("cycles list plain finite-alphabet letters, got '" + token +
                                    "'");
      }
      cycle.push_back(l.index);
    }
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    cycles.push_back(std::move(cycle));
    pos = close + 1;
    skip_ws();
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// ExperimentConfig

namespace {

[[noreturn]] void fail_at(const KeyValueConfig& kv, const std::string& section,
                          const std::string& key, const std::string& what) {
  throw ConfigError(kv.source(), kv.line_of(section, key), 1,
                    "[" + section + "] " + key + ": " + what);
}

SurdScalar scalar_at(const KeyValueConfig& kv, const std::string& section,
                     const std::string& key, const std::string& fallback = "") {
  const std::string text =
      fallback.empty() ? kv.get(section, key) : kv.get_or(section, key, fallback);
  try {
    return SurdScalar::parse(text);
  } catch (const std::invalid_argument& e) {
    fail_at(kv, section, key, e.what());
  }
}

GroupKind parse_group(const KeyValueConfig& kv, const std::string& text) {
  if (text == "z") return GroupKind::Z;
  if (text == "r") return GroupKind::R;
  if (text == "r2") return GroupKind::R2;
  throw ConfigError(kv.source(), kv.line_of("system", "group"), 1,
                    "group must be one of z, r, r2; got '" + text + "'");
}

StateKind parse_state_kind(const KeyValueConfig& kv, const std::string& text) {
  if (text == "product_trace") return StateKind::ProductTrace;
  if (text == "kappa_D" || text == "kappa_d") return StateKind::KappaD;
  if (text == "kappa_diag") return StateKind::KappaDiag;
  if (text == "omega_rel") return StateKind::OmegaRel;
  throw ConfigError(kv.source(), kv.line_of("functional", "kind"), 1,
                    "functional must be product_trace, kappa_D, kappa_diag or omega_rel; got '" +
                        text + "'");
}

S2Rule parse_s2_rule(const KeyValueConfig& kv, const std::string& section,
                     const std::string& key) {
  const std::string text = kv.get(section, key);
  if (text == "shift") return S2Rule::shift();
  if (text == "identity") return S2Rule::identity();
  if (text.rfind("cycles:", 0) == 0) {
    try {
      return S2Rule::block_cycles(std::stol(text.substr(7)));
    } catch (const std::exception&) {
      fail_at(kv, section, key, "bad cycle length in '" + text + "'");
    }
  }
  fail_at(kv, section, key, "rule must be shift, identity or cycles:<length>; got '" + text + "'");
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  return from_kv(KeyValueConfig::parse_file(path));
}

ExperimentConfig ExperimentConfig::from_kv(const KeyValueConfig& kv) {
  ExperimentConfig cfg;

  const std::string kind = kv.get("system", "kind");
  if (kind == "qtorus") {
    cfg.kind = SystemKind::QTorus;
  } else if (kind == "qtorus_pair") {
    cfg.kind = SystemKind::QTorusPair;
  } else if (kind == "qtorus_mirror") {
    cfg.kind = SystemKind::QTorusMirror;
  } else if (kind == "group_dual") {
    cfg.kind = SystemKind::GroupDual;
  } else {
    fail_at(kv, "system", "kind",
            "must be qtorus, qtorus_pair, qtorus_mirror or group_dual; got '" + kind + "'");
  }

  if (cfg.kind == SystemKind::GroupDual) {
    std::vector<std::vector<long>> t_cycles, k_cycles;
    try {
      t_cycles = parse_cycles(kv.get("system", "t_s1_cycles"));
      k_cycles = kv.has("system", "k_s1_cycles")
                     ? parse_cycles(kv.get("system", "k_s1_cycles"))
                     : t_cycles;
    } catch (const std::invalid_argument& e) {
      fail_at(kv, "system", "t_s1_cycles", e.what());
    }
    try {
      cfg.dual = DualSystemConfig{
          GeneratorAutomorphism(t_cycles, parse_s2_rule(kv, "system", "t_s2")),
          GeneratorAutomorphism(k_cycles, parse_s2_rule(kv, "system", "k_s2"))};
    } catch (const std::invalid_argument& e) {
      fail_at(kv, "system", "t_s1_cycles", e.what());
    }
  } else {
    cfg.theta1 = scalar_at(kv, "system", cfg.kind == SystemKind::QTorus ? "theta" : "theta1");
    if (cfg.kind == SystemKind::QTorusPair) {
      cfg.theta2 = scalar_at(kv, "system", "theta2");
    } else if (cfg.kind == SystemKind::QTorusMirror) {
      cfg.theta2 = -cfg.theta1;
      if (kv.has("system", "theta2") && scalar_at(kv, "system", "theta2") != cfg.theta2) {
        fail_at(kv, "system", "theta2", "qtorus_mirror forces theta2 = -theta1 = " +
                                            cfg.theta2.str());
      }
    }
    cfg.p = scalar_at(kv, "system", "p", "1");
    cfg.q = scalar_at(kv, "system", "q", "1");
    if (cfg.kind != SystemKind::QTorus) {
      cfg.c = scalar_at(kv, "system", "c", "1");
      cfg.d = scalar_at(kv, "system", "d", "1");
    }
    cfg.group = parse_group(kv, kv.get_or("system", "group", "r2"));
  }

  // [folner]
  if (kv.has("folner", "shape") || kv.has("folner", "sizes")) {
    const std::string shape = kv.get_or("folner", "shape", "interval");
    if (shape == "interval" || shape == "symmetric_interval") {
      cfg.shape = FolnerRegion::Shape::Interval;
    } else if (shape == "box" || shape == "symmetric_box") {
      cfg.shape = FolnerRegion::Shape::Box;
    } else if (shape == "range" || shape == "symmetric_range") {
      cfg.shape = FolnerRegion::Shape::IntRange;
    } else {
      fail_at(kv, "folner", "shape", "unknown shape '" + shape + "'");
    }
    cfg.symmetric_region = shape.rfind("symmetric_", 0) == 0;

    std::istringstream sizes(kv.get("folner", "sizes"));
    std::string item;
    while (std::getline(sizes, item, ',')) {
      try {
        cfg.sizes.push_back(SurdScalar::parse(item));
      } catch (const std::invalid_argument& e) {
        fail_at(kv, "folner", "sizes", e.what());
      }
      if (cfg.sizes.back().sign() <= 0) {
        fail_at(kv, "folner", "sizes", "sizes must be positive");
      }
      if (cfg.sizes.size() >= 2 &&
          (cfg.sizes.back() - cfg.sizes[cfg.sizes.size() - 2]).sign() <= 0) {
        fail_at(kv, "folner", "sizes", "sizes must be strictly increasing");
      }
    }
    if (cfg.sizes.empty()) fail_at(kv, "folner", "sizes", "no sizes given");
  }

  // [observable]
  if (kv.has("observable", "a") && cfg.kind == SystemKind::GroupDual) {
    cfg.word_a = parse_word(kv.get("observable", "a"));
  } else if (kv.has("observable", "a")) {
    try {
      cfg.observable_a = parse_torus_monomial(kv.get("observable", "a"));
    } catch (const std::invalid_argument& e) {
      fail_at(kv, "observable", "a", e.what());
    }
  }
  if (kv.has("observable", "b") && cfg.kind == SystemKind::GroupDual) {
    cfg.word_b = parse_word(kv.get("observable", "b"));
  }
  if (kv.has("observable", "c")) {
    try {
      cfg.observable_c = parse_tensor_monomial(kv.get("observable", "c"));
    } catch (const std::invalid_argument& e) {
      fail_at(kv, "observable", "c", e.what());
    }
  }

  if (kv.has("functional", "kind")) {
    cfg.functional = parse_state_kind(kv, kv.get("functional", "kind"));
  }

  if (kv.has("run", "seed")) {
    try {
      cfg.seed = std::stoull(kv.get("run", "seed"));
    } catch (const std::exception&) {
      fail_at(kv, "run", "seed", "seed must be a nonnegative integer");
    }
  }

  // shape/group consistency
  if (cfg.kind != SystemKind::GroupDual && !cfg.sizes.empty()) {
    const bool range = cfg.shape == FolnerRegion::Shape::IntRange;
    const bool box = cfg.shape == FolnerRegion::Shape::Box;
    if (range != (cfg.group == GroupKind::Z) || box != (cfg.group == GroupKind::R2)) {
      fail_at(kv, "folner", "shape",
              "shape must match the acting group: z averages ranges, r intervals, r2 boxes");
    }
  }

  return cfg;
}

ActionSpec ExperimentConfig::action() const {
  if (kind == SystemKind::GroupDual) {
    throw std::invalid_argument("group_dual systems do not define a character action");
  }
  if (kind == SystemKind::QTorus) return ActionSpec::torus_action(group, p, q);
  return ActionSpec::tensor_action(group, p, q, c, d);
}

RegionFactory ExperimentConfig::region_factory() const {
  const bool symmetric = symmetric_region;
  switch (shape) {
    case FolnerRegion::Shape::Interval:
      return [symmetric](const SurdScalar& size) {
        return symmetric ? FolnerRegion::symmetric_interval(size)
                         : FolnerRegion::interval_from_zero(size);
      };
    case FolnerRegion::Shape::Box:
      return [symmetric](const SurdScalar& size) {
        return symmetric ? FolnerRegion::symmetric_box(size) : FolnerRegion::box_from_zero(size);
      };
    case FolnerRegion::Shape::IntRange:
      return [symmetric](const SurdScalar& size) {
        if (!size.is_integer()) {
          throw std::invalid_argument("integer range size must be integral");
        }
        const long n = size.floor_long();
        return symmetric ? FolnerRegion::symmetric_int_range(n) : FolnerRegion::int_range(n);
      };
  }
  throw std::invalid_argument("unknown region shape");
}

StateFunctional ExperimentConfig::state() const {
  return StateFunctional::make(functional, theta1, theta2);
}

std::vector<long> ExperimentConfig::integer_sizes() const {
  std::vector<long> out;
  out.reserve(sizes.size());
  for (const SurdScalar& s : sizes) {
    if (!s.is_integer()) throw std::invalid_argument("sizes must be integers here");
    out.push_back(s.floor_long());
  }
  return out;
}

}  // namespace ncergo
