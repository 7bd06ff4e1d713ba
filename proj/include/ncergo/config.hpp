#ifndef NCERGO_CONFIG_HPP
#define NCERGO_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncergo/action.hpp"
#include "ncergo/coupling.hpp"
#include "ncergo/dual_system.hpp"
#include "ncergo/folner.hpp"

namespace ncergo {

// Parse or validation failure with a file position for the CLI to report.
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& source, int line, int column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Sectioned key=value text: `[section]` headers, `key = value` entries, `#`
// comments, blank lines ignored.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_text(std::string_view text, const std::string& source_name);

  bool has(const std::string& section, const std::string& key) const;
  // throws ConfigError naming the missing entry
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  int line_of(const std::string& section, const std::string& key) const;
  const std::string& source() const { return source_; }

 private:
  struct Entry {
    std::string value;
    int line;
  };
  std::string source_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
};

// Observable grammars.
Monomial parse_torus_monomial(std::string_view text);         // u^INT v^INT
TensorMonomial parse_tensor_monomial(std::string_view text);  // u^INT v^INT w^INT z^INT
Word parse_word(std::string_view text);   // whitespace-separated s<i>/t<z> with optional ^-1
std::vector<std::vector<long>> parse_cycles(std::string_view text);  // (s1 s2)(s3 s4 s5)

// A fully validated experiment description.
struct ExperimentConfig {
  enum class SystemKind { QTorus, QTorusPair, QTorusMirror, GroupDual };

  SystemKind kind = SystemKind::QTorus;
  SurdScalar theta1, theta2;
  SurdScalar p{1}, q{1}, c{1}, d{1};
  GroupKind group = GroupKind::R;

  FolnerRegion::Shape shape = FolnerRegion::Shape::Interval;
  bool symmetric_region = false;
  std::vector<SurdScalar> sizes;  // strictly increasing, positive

  std::optional<Monomial> observable_a;        // [observable] a, torus systems
  std::optional<TensorMonomial> observable_c;  // [observable] c, tensor systems
  std::optional<Word> word_a, word_b;          // [observable] a/b, group systems

  StateKind functional = StateKind::ProductTrace;
  std::uint64_t seed = 0;

  std::optional<DualSystemConfig> dual;  // GroupDual systems

  ActionSpec action() const;
  RegionFactory region_factory() const;
  StateFunctional state() const;
  std::vector<long> integer_sizes() const;

  static ExperimentConfig load(const std::string& path);
  static ExperimentConfig from_kv(const KeyValueConfig& kv);
};

}  // namespace ncergo

#endif  // NCERGO_CONFIG_HPP
