#pragma once

#include <string>
#include <string_view>

#include "bernstein/gallery.hpp"

namespace bernstein {

/// Serializes a gallery function to its JSON document (see docs/formats.md).
/// Rationals are written as "p/q" strings.
std::string to_json(const GalleryFn& f, int indent = 2);

/// Parses a JSON document produced by `to_json` or written by hand.
/// Throws ParseError for malformed documents and ConstructionError when the
/// described function violates an invariant.
GalleryFn gallery_from_json(std::string_view text);

}  // namespace bernstein
