#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "htt/enriched.hpp"
#include "htt/fincat.hpp"
#include "htt/hall.hpp"
#include "htt/simpset.hpp"
#include "htt/sspace.hpp"

// Line-oriented text interchange formats. '#' starts a comment; blank lines
// are ignored. Every printer emits a canonical form and parse(print(x))
// reproduces x exactly. The grammars are documented in the README.

namespace htt::formats {

std::string print_sset(const simpset::TruncatedSimplicialSet& X);
simpset::TruncatedSimplicialSet parse_sset(const std::string& text);

std::string print_category(const fincat::FinCategory& C);
fincat::FinCategory parse_category(const std::string& text);

std::string print_bisimplicial(const sspace::TruncatedBisimplicialSet& W);
sspace::TruncatedBisimplicialSet parse_bisimplicial(const std::string& text);

struct QuiverFile {
    hall::Quiver quiver;
    std::vector<std::pair<std::string, hall::Rep>> reps;
};
std::string print_quiver(const QuiverFile& qf);
QuiverFile parse_quiver(const std::string& text);

std::string print_scat(const enriched::FinSimplicialCategory& C);
enriched::FinSimplicialCategory parse_scat(const std::string& text);

/// Functor file: object/morphism lines; endpoints supplied by the caller.
fincat::Functor parse_functor(const std::string& text,
                              const fincat::FinCategory& source,
                              const fincat::FinCategory& target);
std::string print_functor(const fincat::Functor& F);

std::string read_file(const std::string& path);

} // namespace htt::formats
