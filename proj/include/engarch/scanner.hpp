#ifndef ENGARCH_SCANNER_HPP
#define ENGARCH_SCANNER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace engarch {

// One repository to analyse. Paths are absolute once the config is loaded.
struct RepoSpec {
  std::string name;
  std::string root;
  std::vector<std::string> extensions{".h", ".cpp"};
  std::vector<std::string> exclude_dirs;
  // Extra include directories searched after the repo root (repo-relative
  // entries are resolved at config load time).
  std::vector<std::string> include_dirs;
  std::string mapping_file;  // empty when only scanning
};

enum class Delimiter { Quoted, Angled };

// A syntactic #include occurrence, before resolution.
struct RawInclude {
  std::string including_file;  // absolute
  std::string directive_text;  // the path between the delimiters
  Delimiter delimiter = Delimiter::Quoted;
  int line = 1;  // 1-based
};

// #include MACRO_NAME — unresolvable without preprocessing; kept as a
// diagnostic, never an edge.
struct MacroInclude {
  std::string including_file;
  std::string token;
  int line = 1;
};

struct FileDiagnostic {
  std::string path;
  std::string message;
};

// Every regular file under spec.root whose suffix is in spec.extensions and
// whose path contains no component from spec.exclude_dirs. Symlinks are not
// followed. Sorted lexicographically. Throws ConfigError when the root is
// missing or unreadable.
std::vector<std::string> scan_repo(const RepoSpec& spec);

struct ExtractResult {
  std::vector<RawInclude> includes;
  std::vector<MacroInclude> macro_includes;
};

// All #include directives of one file, in source order. Directives inside
// // and /* */ comments are ignored; whitespace between '#' and 'include'
// is tolerated. Content is treated as 8-bit text and never rejected.
ExtractResult extract_includes(const std::string& file_path,
                               std::string_view content);

// Comment bodies replaced by spaces, newlines kept (so line numbers and
// column-free parsing survive). String and char literals are tracked only
// to keep their contents from opening or closing comments.
std::string strip_comments(std::string_view content);

}  // namespace engarch

#endif
