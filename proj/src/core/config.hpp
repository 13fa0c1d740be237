#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gnop {

// Flat key = value configuration. Also serves as the reproducibility record:
// every output file embeds the effective config, so it must serialize
// deterministically (keys are kept sorted by std::map).
class Config {
 public:
  Config() = default;

  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double v);
  void set_int(const std::string& key, long long v);

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& def) const;
  std::string require_string(const std::string& key) const;
  double get_double(const std::string& key, double def) const;
  long long get_int(const std::string& key, long long def) const;
  bool get_bool(const std::string& key, bool def) const;
  // comma-separated integers, e.g. taus = 7,14,30
  std::vector<int> get_int_list(const std::string& key, const std::vector<int>& def) const;

  // "key = value" lines, sorted by key.
  std::vector<std::string> lines() const;
  std::string to_string() const;

  const std::map<std::string, std::string>& entries() const { return kv_; }
  void merge(const Config& other);  // other wins

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace gnop
