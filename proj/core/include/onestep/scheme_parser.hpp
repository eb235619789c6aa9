#pragma once

#include <string_view>

#include "onestep/errors.hpp"
#include "onestep/scheme.hpp"

namespace onestep {

/// Parses interaction-scheme source text.
///
/// Line-oriented grammar:
///
///   file      := { line }
///   line      := ( species_decl | param_decl | reaction | comment | blank )
///   species_decl := "species" ident { "," ident }
///   param_decl   := "param" ident "=" number
///   reaction  := side "->" side "@" rate [ "~" rate ]
///   side      := "0" | term { "+" term }
///   term      := [ integer ] ident          -- missing integer = 1
///   rate      := number | ident
///   comment   := "#" to end of line
///
/// Numbers are decimal with optional exponent; identifiers match
/// [A-Za-z_][A-Za-z0-9_]*. An omitted "~ rate" means the interaction is
/// irreversible (backward rate zero). A bare "0" side denotes the empty
/// state. Species are auto-registered in first-appearance order unless a
/// `species` header is present, in which case unknown names are errors.
/// Named rates must be bound by a `param` line earlier in the file.
///
/// Throws ParseError with a 1-based line/column on syntax errors, duplicate
/// species or parameter declarations, unknown species/parameters, negative
/// rates, no-op reactions (reactants equal products), all-zero rate pairs,
/// stoichiometries above kMaxStoichiometry, and files with no interactions.
InteractionScheme parse_scheme(std::string_view text);

}  // namespace onestep
