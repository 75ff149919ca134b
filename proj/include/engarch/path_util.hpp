#ifndef ENGARCH_PATH_UTIL_HPP
#define ENGARCH_PATH_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace engarch {

// Absolute, lexically normalised form of `p` (resolved against the CWD when
// relative). Never touches the filesystem.
std::string absolute_normalized(std::string_view p);

// Directory part of an absolute path ("/a/b/c.h" -> "/a/b", "/x" -> "/").
std::string parent_dir(std::string_view abs_path);

// Last path component ("/a/b/c.h" -> "c.h").
std::string_view path_basename(std::string_view path);

// Splits on '/' (and optionally '\'), dropping empty components.
std::vector<std::string> split_components(std::string_view path,
                                          bool split_backslash = false);

// Componentwise containment: path == root or path starts with root + "/".
// Both sides must already be normalised.
bool path_within(std::string_view root, std::string_view path);

// Joins `rel` onto `dir` and normalises "." / ".." segments lexically.
std::string join_normalized(std::string_view dir, std::string_view rel);

// Repo-relative form of `abs_path` with '/' separators; `abs_path` must lie
// under `root` (check with path_within first). Root itself maps to "".
std::string relative_to(std::string_view root, std::string_view abs_path);

// True when the trailing components of `path` equal the last `count`
// entries of `components` (componentwise, not substring).
bool ends_with_components(std::string_view path,
                          const std::vector<std::string>& components,
                          std::size_t count);

}  // namespace engarch

#endif
