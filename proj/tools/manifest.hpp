#pragma once

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "excloak/version.hpp"

namespace excloak::tools {

/// Records every file a command writes, plus its parameters, and lands as
/// manifest.json in the output directory.
class Manifest {
 public:
  explicit Manifest(std::string command, std::filesystem::path out_dir)
      : command_(std::move(command)), dir_(std::move(out_dir)) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }

  template <typename T>
  void param(const std::string& key, const T& value) {
    params_[key] = value;
  }

  std::filesystem::path path_for(const std::string& name, const std::string& kind) {
    nlohmann::json entry;
    entry["name"] = name;
    entry["kind"] = kind;
    files_.push_back(entry);
    return dir_ / name;
  }

  void write() const {
    nlohmann::json doc;
    doc["version"] = excloak::kVersion;
    doc["command"] = command_;
    doc["parameters"] = params_;
    doc["files"] = files_;
    std::ofstream out(dir_ / "manifest.json", std::ios::binary);
    out << doc.dump(2) << "\n";
  }

 private:
  std::string command_;
  std::filesystem::path dir_;
  nlohmann::json params_;
  nlohmann::json files_ = nlohmann::json::array();
};

}  // namespace excloak::tools
