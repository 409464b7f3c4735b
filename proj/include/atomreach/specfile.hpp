#pragma once

#include <map>
#include <string>
#include <string_view>

#include "atomreach/logic.hpp"
#include "atomreach/machine.hpp"

namespace atomreach {

// A parsed spec file: one atoms declaration, named PDS blocks, and named NFA
// blocks tied to the PDS whose alphabet they read.
struct SpecFile {
  std::string backend_name;
  BackendPtr backend;
  std::map<std::string, FoPds> pds;
  std::map<std::string, FoNfa> nfas;
  std::map<std::string, std::string> nfa_pds;  // nfa name -> pds name
};

// Grammar:
//   spec      := "atoms" backendName block*
//   block     := pds | nfa
//   pds       := "pds" NAME "{" (letterDecl | locDecl | pushRule | popRule)* "}"
//   letterDecl:= "letter" NAME "(" INT ")" ";"
//   locDecl   := "loc" NAME "(" INT ")" ";"
//   pushRule  := "push" LOC LETTER "->" LOC LETTER LETTER ":" formula ";"
//   popRule   := "pop" LOC LETTER "->" LOC ":" formula ";"
//   nfa       := "nfa" NAME "for" PDSNAME "{" (stateDecl | transDecl)* "}"
//   stateDecl := "state" NAME "(" INT ")" ["final" [":" formula]] ";"
//   transDecl := "trans" STATE LETTER "->" STATE ":" formula ";"
// Variable conventions in formulas: source state block x1..xm, letter block
// y1..yd, target state block p1..pn, first pushed letter u1.., second pushed
// letter v1...  lt(a,b) abbreviates le(a,b) & !eq(a,b) on ordered backends.
// Names must be declared before use.  Diagnostics carry line:column.
SpecFile parse_spec(std::string_view text, int width_budget = kDefaultWidthBudget);

// Canonical spec text; parsing it again yields an identical structure.
std::string serialize_spec(const SpecFile& spec);

}  // namespace atomreach
