#include "engarch/scanner.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <set>

#include "engarch/errors.hpp"
#include "engarch/path_util.hpp"

namespace fs = std::filesystem;

namespace engarch {

std::vector<std::string> scan_repo(const RepoSpec& spec) {
  std::error_code ec;
  fs::path root = fs::absolute(fs::path(spec.root)).lexically_normal();
  if (!fs::is_directory(root, ec) || ec) {
    throw ConfigError("repository root is not a readable directory: " +
                      spec.root);
  }
  std::set<std::string> extensions(spec.extensions.begin(),
                                   spec.extensions.end());
  std::set<std::string> excluded(spec.exclude_dirs.begin(),
                                 spec.exclude_dirs.end());

  std::vector<std::string> files;
  fs::recursive_directory_iterator it(
      root, fs::directory_options::skip_permission_denied, ec);
  if (ec) {
    throw ConfigError("cannot read repository root: " + spec.root + ": " +
                      ec.message());
  }
  for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      throw ConfigError("error walking " + spec.root + ": " + ec.message());
    }
    const fs::directory_entry& entry = *it;
    std::error_code sec;
    fs::file_status status = entry.symlink_status(sec);
    if (sec) continue;
    if (fs::is_symlink(status)) {
      // never follow links; a linked directory is also not descended into
      continue;
    }
    if (fs::is_directory(status)) {
      if (excluded.count(entry.path().filename().generic_string()) > 0) {
        it.disable_recursion_pending();
      }
      continue;
    }
    if (!fs::is_regular_file(status)) continue;
    if (extensions.count(entry.path().extension().generic_string()) == 0) {
      continue;
    }
    files.push_back(entry.path().lexically_normal().generic_string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string strip_comments(std::string_view content) {
  enum class State { Code, LineComment, BlockComment, String, Char };
  State state = State::Code;
  std::string out;
  out.reserve(content.size());
  for (std::size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    char next = i + 1 < content.size() ? content[i + 1] : '\0';
    switch (state) {
      case State::Code:
        if (c == '/' && next == '/') {
          state = State::LineComment;
          out += "  ";
          ++i;
        } else if (c == '/' && next == '*') {
          state = State::BlockComment;
          out += "  ";
          ++i;
        } else {
          if (c == '"') state = State::String;
          if (c == '\'') state = State::Char;
          out += c;
        }
        break;
      case State::LineComment:
        if (c == '\n') {
          state = State::Code;
          out += '\n';
        } else {
          out += ' ';
        }
        break;
      case State::BlockComment:
        if (c == '*' && next == '/') {
          state = State::Code;
          out += "  ";
          ++i;
        } else {
          out += c == '\n' ? '\n' : ' ';
        }
        break;
      case State::String:
      case State::Char: {
        char quote = state == State::String ? '"' : '\'';
        if (c == '\\' && next != '\0' && next != '\n') {
          out += c;
          out += next;
          ++i;
        } else if (c == quote) {
          state = State::Code;
          out += c;
        } else if (c == '\n') {
          // unterminated literal: give up at end of line
          state = State::Code;
          out += '\n';
        } else {
          out += c;
        }
        break;
      }
    }
  }
  return out;
}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::size_t skip_ws(std::string_view line, std::size_t i) {
  while (i < line.size() &&
         (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
    ++i;
  }
  return i;
}

}  // namespace

ExtractResult extract_includes(const std::string& file_path,
                               std::string_view content) {
  ExtractResult result;
  std::string stripped = strip_comments(content);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= stripped.size()) {
    auto nl = stripped.find('\n', pos);
    std::string_view line(stripped.data() + pos,
                          (nl == std::string::npos ? stripped.size() : nl) -
                              pos);
    pos = nl == std::string::npos ? stripped.size() + 1 : nl + 1;
    ++line_no;

    std::size_t i = skip_ws(line, 0);
    if (i >= line.size() || line[i] != '#') continue;
    i = skip_ws(line, i + 1);
    static constexpr std::string_view kKeyword = "include";
    if (line.substr(i, kKeyword.size()) != kKeyword) continue;
    i += kKeyword.size();
    if (i < line.size() && is_ident_char(line[i])) continue;  // include_next etc.
    i = skip_ws(line, i);
    if (i >= line.size()) continue;

    if (line[i] == '"' || line[i] == '<') {
      char closer = line[i] == '"' ? '"' : '>';
      auto end = line.find(closer, i + 1);
      if (end == std::string_view::npos || end == i + 1) continue;  // malformed
      result.includes.push_back(
          {file_path, std::string(line.substr(i + 1, end - i - 1)),
           line[i] == '"' ? Delimiter::Quoted : Delimiter::Angled, line_no});
    } else {
      // computed include: record the raw token for diagnostics
      std::size_t end = i;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
             line[end] != '\r') {
        ++end;
      }
      std::string token(line.substr(i, end - i));
      if (!token.empty()) {
        result.macro_includes.push_back({file_path, std::move(token), line_no});
      }
    }
  }
  return result;
}

}  // namespace engarch
