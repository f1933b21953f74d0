#ifndef LK_CORPUS_HPP
#define LK_CORPUS_HPP

#include <string>
#include <vector>

#include "lk/json_io.hpp"

namespace lk {

/// Bundled example documents (algebras, complexes, 2-groups, cocycle data).
/// The environment variable LINFTYKAN_CORPUS_DIR overrides the bundled set:
/// `corpus_document(name)` then reads <dir>/<name>.json instead.
std::vector<std::string> corpus_names();
json corpus_document(const std::string& name);

/// Resolves a CLI path: plain filesystem paths load from disk, a
/// "corpus:<name>" pseudo-path loads a bundled document.
json load_document(const std::string& path);

}  // namespace lk

#endif
