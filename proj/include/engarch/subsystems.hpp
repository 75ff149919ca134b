#ifndef ENGARCH_SUBSYSTEMS_HPP
#define ENGARCH_SUBSYSTEMS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace engarch {

// The closed vocabulary of game-engine subsystems, in canonical order.
// The first 15 are the runtime subsystems; EDI covers editor tooling.
enum class Subsystem : std::uint8_t {
  AUD,  // Audio
  COR,  // Core
  DEB,  // Profiling and Debugging
  FES,  // Front End
  GMP,  // Gameplay Foundations
  HID,  // Human Interface Devices
  LLR,  // Low-Level Renderer
  OMP,  // Online Multiplayer
  PHY,  // Collision and Physics
  PLA,  // Platform Independence Layer
  RES,  // Resources
  SDK,  // Third-party SDKs
  SGC,  // Scene graph/culling optimizations
  SKA,  // Skeletal Animation
  VFX,  // Visual Effects
  EDI,  // World Editor
};

inline constexpr std::size_t kSubsystemCount = 16;

const std::array<Subsystem, kSubsystemCount>& all_subsystems();
std::string_view code_of(Subsystem s);
std::string_view display_name_of(Subsystem s);
std::optional<Subsystem> subsystem_from_code(std::string_view code);

inline int index_of(Subsystem s) { return static_cast<int>(s); }

// One mapping row: a repo-relative folder (or exact file) prefix and the
// subsystem its files belong to. Paths use '/' separators, no trailing '/'.
struct MappingEntry {
  std::string folder_prefix;
  Subsystem code;
};

struct SubsystemMapping {
  std::vector<MappingEntry> entries;
};

// Parses the `folder,subsystem` CSV. `origin` names the source in errors.
// Throws ConfigError for a bad header, unknown codes (with the offending
// line number) or duplicate folders (with both line numbers).
SubsystemMapping parse_mapping(std::string_view text, const std::string& origin);
SubsystemMapping load_mapping(const std::string& path);

// Longest componentwise folder-prefix match; exact file rows win naturally
// because the whole relative path is the longest possible prefix.
// Returns nullopt when no entry matches.
std::optional<Subsystem> assign_subsystem(std::string_view abs_path,
                                          std::string_view repo_root,
                                          const SubsystemMapping& mapping);

struct TaggedFile {
  std::string path;  // absolute
  std::optional<Subsystem> code;
};

struct CoverageReport {
  std::array<int, kSubsystemCount> per_code{};
  int unassigned = 0;
  int total = 0;
  double coverage_percent = 100.0;  // vacuously full for an empty file set
};

CoverageReport mapping_coverage(const std::vector<TaggedFile>& tagged);

// Advisory name-based suggestions: repo-relative folders whose basename and
// a subsystem display name contain one another (case-insensitive).
std::vector<MappingEntry> suggest_mapping(
    const std::vector<std::string>& files, std::string_view repo_root);

}  // namespace engarch

#endif
