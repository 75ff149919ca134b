#include "engarch/path_util.hpp"

#include <filesystem>

namespace fs = std::filesystem;

namespace engarch {

std::string absolute_normalized(std::string_view p) {
  return fs::absolute(fs::path(p)).lexically_normal().generic_string();
}

std::string parent_dir(std::string_view abs_path) {
  auto pos = abs_path.rfind('/');
  if (pos == std::string_view::npos) return std::string(abs_path);
  if (pos == 0) return "/";
  return std::string(abs_path.substr(0, pos));
}

std::string_view path_basename(std::string_view path) {
  auto pos = path.find_last_of("/\\");
  return pos == std::string_view::npos ? path : path.substr(pos + 1);
}

std::vector<std::string> split_components(std::string_view path,
                                          bool split_backslash) {
  std::vector<std::string> out;
  std::string current;
  for (char c : path) {
    if (c == '/' || (split_backslash && c == '\\')) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

bool path_within(std::string_view root, std::string_view path) {
  if (path == root) return true;
  if (path.size() <= root.size()) return false;
  return path.substr(0, root.size()) == root && path[root.size()] == '/';
}

std::string join_normalized(std::string_view dir, std::string_view rel) {
  return (fs::path(dir) / fs::path(rel)).lexically_normal().generic_string();
}

std::string relative_to(std::string_view root, std::string_view abs_path) {
  if (abs_path == root) return "";
  return std::string(abs_path.substr(root.size() + 1));
}

bool ends_with_components(std::string_view path,
                          const std::vector<std::string>& components,
                          std::size_t count) {
  auto path_comps = split_components(path);
  if (count > components.size() || count > path_comps.size()) return false;
  for (std::size_t i = 0; i < count; ++i) {
    if (path_comps[path_comps.size() - 1 - i] !=
        components[components.size() - 1 - i]) {
      return false;
    }
  }
  return true;
}

}  // namespace engarch
