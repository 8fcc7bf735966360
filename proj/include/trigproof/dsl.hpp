#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigproof/script.hpp"

namespace trigproof {

// Parses one expression over the given atom names. Grammar: rational
// constants, atoms, + - * / ^ with integer exponents, parentheses.
RatFunc parse_expression(const std::string& text,
                         const std::vector<Atom>& atoms);

// Parses the body of a .trig lemma file. Line-oriented, UTF-8, '#' comments:
//
//   lemma <id> kind axiom|derived|theorem [schema] [tag <name>]
//   figure <figid>
//   depends <id>[, <id>...]
//   note <text>
//   atom <name> [domain "<text>"] [bind <quantity>] [nonzero]
//   nonzero <poly>[, <poly>...]
//   statement <label>: <expr> = <expr>
//   script <id>
//   given <label>: <expr> = <expr> by <id>
//   hyp <atom> := <expr> nonzero <poly>[, <poly>...]
//   step <label>: <expr> = <expr> by ring|substitute(<ref>)|divide_by(<poly>)
//                                   |lemma(<id> with <atom>=<expr>,...)
//   conclude <label>
LemmaFile parse_lemma_text(const std::string& text,
                           const std::string& source_path = "");

LemmaFile parse_lemma_file(const std::string& path);

// Spec-surface operation: parse just a proof script (a lemma body whose
// script section is mandatory).
ProofScript parse_script(const std::string& text);

}  // namespace trigproof
