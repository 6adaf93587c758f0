#ifndef SNMOD_CONFIG_HPP
#define SNMOD_CONFIG_HPP

#include <cstdint>
#include <string>

namespace snmod {

struct Config {
  size_t dimension_cap = 4096; // guards induced modules and factor splitting
  int meataxe_word_cap = 200;  // random algebra elements before giving up
  uint64_t seed = 0;
  std::string cache_dir;        // empty: in-memory caching only
  std::string format = "json"; // json | csv | text

  void validate() const;
};

// process-wide configuration, set once by the CLI before running commands
Config& config();

// parse "key=value" lines into cfg; unknown keys are an error
void load_config_file(const std::string& path, Config& cfg);

std::string tool_version();

} // namespace snmod

#endif
