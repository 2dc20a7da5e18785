#include <hydrosym/catalog.hpp>

namespace hydrosym {

// Generators, reference supercommutation tables, and the one-dimensional
// subalgebra representatives of both symmetry algebras.
const char* Catalog::algebra_json() {
  return R"JSON({
  "generators": {
    "classical": [
      {"name": "M1", "parity": "even", "coeffs": {"x": "x", "t": "t"}},
      {"name": "M2", "parity": "even", "coeffs": {"x": "x", "t": "-t", "R": "2*R", "S": "2*S"}},
      {"name": "W",  "parity": "even", "coeffs": {"x": "t", "R": "1", "S": "1"}},
      {"name": "J",  "parity": "even", "coeffs": {"t": "x", "R": "-R^2", "S": "-S^2"}},
      {"name": "T1", "parity": "even", "coeffs": {"x": "1"}},
      {"name": "T0", "parity": "even", "coeffs": {"t": "1"}}
    ],
    "susy": [
      {"name": "D1", "parity": "even", "coeffs": {"x": "2*x", "t": "3*t", "R": "-R", "S": "-S"}},
      {"name": "D2", "parity": "even", "coeffs": {"x": "x", "t": "t", "xi": "xi"}},
      {"name": "D3", "parity": "even", "coeffs": {"x": "x", "t": "t", "psi": "psi"}},
      {"name": "B",  "parity": "even", "coeffs": {"x": "t", "R": "1", "S": "1"}},
      {"name": "P0", "parity": "even", "coeffs": {"t": "1"}},
      {"name": "P1", "parity": "even", "coeffs": {"x": "1"}},
      {"name": "Y1", "parity": "odd",  "coeffs": {"xi": "1"}},
      {"name": "Y2", "parity": "odd",  "coeffs": {"psi": "1"}}
    ]
  },
  "tables": {
    "classical": {
      "order": ["M1", "M2", "W", "J", "T1", "T0"],
      "entries": [
        ["0", "0", "0",   "0",   "-T1", "-T0"],
        ["0", "0", "-2*W", "2*J", "-T1", "T0"],
        ["0", "2*W", "0",  "-M2", "0",   "-T1"],
        ["0", "-2*J", "M2", "0",  "-T0", "0"],
        ["T1", "T1", "0",  "T0",  "0",   "0"],
        ["T0", "-T0", "T1", "0",  "0",   "0"]
      ]
    },
    "susy": {
      "order": ["D1", "D2", "D3", "B", "P0", "P1", "Y1", "Y2"],
      "entries": [
        ["0",    "0",   "0",   "B",   "-3*P0", "-2*P1", "0",   "0"],
        ["0",    "0",   "0",   "0",   "-P0",   "-P1",   "-Y1", "0"],
        ["0",    "0",   "0",   "0",   "-P0",   "-P1",   "0",   "-Y2"],
        ["-B",   "0",   "0",   "0",   "-P1",   "0",     "0",   "0"],
        ["3*P0", "P0",  "P0",  "P1",  "0",     "0",     "0",   "0"],
        ["2*P1", "P1",  "P1",  "0",   "0",     "0",     "0",   "0"],
        ["0",    "Y1",  "0",   "0",   "0",     "0",     "0",   "0"],
        ["0",    "0",   "Y2",  "0",   "0",     "0",     "0",   "0"]
      ]
    }
  },
  "subalgebras": [
    {"label": "L1",  "algebra": "classical", "combo": [["1", "T1"]]},
    {"label": "L2",  "algebra": "classical", "combo": [["1", "M1"]]},
    {"label": "L3",  "algebra": "classical", "combo": [["1", "M2"]]},
    {"label": "L4",  "algebra": "classical", "combo": [["1", "W"]]},
    {"label": "L5",  "algebra": "classical", "combo": [["1", "W"], ["-1", "J"]]},
    {"label": "L6",  "algebra": "classical", "combo": [["1", "M2"], ["k", "M1"]],
     "constraints": "k != 0, 1, -1"},
    {"label": "L7",  "algebra": "classical", "combo": [["1", "M1"], ["1", "M2"]]},
    {"label": "L8",  "algebra": "classical", "combo": [["1", "M2"], ["-1", "M1"]]},
    {"label": "L9",  "algebra": "classical", "combo": [["1", "W"], ["eps", "M1"]],
     "constraints": "eps = +-1"},
    {"label": "L10", "algebra": "classical", "combo": [["1", "W"], ["-1", "J"], ["k", "M1"]],
     "constraints": "k != 0"},
    {"label": "L11", "algebra": "classical", "combo": [["1", "W"], ["eps", "T1"]],
     "constraints": "eps = +-1"},
    {"label": "L12", "algebra": "classical", "combo": [["1", "M1"], ["1", "M2"], ["eps", "T0"]],
     "constraints": "eps = +-1"},
    {"label": "L13", "algebra": "classical", "combo": [["1", "M2"], ["-1", "M1"], ["eps", "T1"]],
     "constraints": "eps = +-1"},
    {"label": "SL1",  "algebra": "susy", "combo": [["1", "P1"]]},
    {"label": "SL2",  "algebra": "susy", "combo": [["1", "P0"]]},
    {"label": "SL3",  "algebra": "susy", "combo": [["1", "B"]]},
    {"label": "SL4",  "algebra": "susy", "combo": [["1", "D1"]]},
    {"label": "SL5",  "algebra": "susy", "combo": [["1", "D2"]]},
    {"label": "SL6",  "algebra": "susy", "combo": [["1", "D3"]]},
    {"label": "SL7",  "algebra": "susy", "combo": [["1", "D2"], ["a", "D1"]],
     "constraints": "a != 0"},
    {"label": "SL8",  "algebra": "susy", "combo": [["1", "D3"], ["a", "D1"]],
     "constraints": "a != 0"},
    {"label": "SL9",  "algebra": "susy", "combo": [["1", "D3"], ["a", "D2"]],
     "constraints": "a != 0"},
    {"label": "SL10", "algebra": "susy", "combo": [["1", "D3"], ["a", "D2"], ["b", "D1"]],
     "constraints": "a != 0, b != 0"},
    {"label": "SL11", "algebra": "susy", "combo": [["1", "D2"], ["eps", "B"]],
     "constraints": "eps = +-1"},
    {"label": "SL12", "algebra": "susy", "combo": [["1", "D3"], ["eps", "B"]],
     "constraints": "eps = +-1"},
    {"label": "SL13", "algebra": "susy", "combo": [["1", "D3"], ["a", "D2"], ["eps", "B"]],
     "constraints": "a != 0, eps = +-1"},
    {"label": "SL14", "algebra": "susy", "combo": [["1", "B"], ["eps", "P0"]],
     "constraints": "eps = +-1"},
    {"label": "SL15", "algebra": "susy", "combo": [["1", "Y1"]]},
    {"label": "SL16", "algebra": "susy", "combo": [["1", "Y2"]]},
    {"label": "SL17", "algebra": "susy", "combo": [["1", "Y1"], ["eps", "Y2"]],
     "constraints": "eps = +-1"},
    {"label": "SL18", "algebra": "susy", "combo": [["1", "P1"], ["eta1", "Y1"], ["eta2", "Y2"]]},
    {"label": "SL19", "algebra": "susy", "combo": [["1", "P0"], ["eta1", "Y1"], ["eta2", "Y2"]]},
    {"label": "SL20", "algebra": "susy", "combo": [["1", "B"], ["eta1", "Y1"], ["eta2", "Y2"]]},
    {"label": "SL21", "algebra": "susy", "combo": [["1", "D1"], ["eta1", "Y1"], ["eta2", "Y2"]]},
    {"label": "SL22", "algebra": "susy", "combo": [["1", "D2"], ["eta2", "Y2"]]},
    {"label": "SL23", "algebra": "susy", "combo": [["1", "D3"], ["eta1", "Y1"]]},
    {"label": "SL24", "algebra": "susy", "combo": [["1", "D2"], ["a", "D1"], ["eta2", "Y2"]],
     "constraints": "a != 0"},
    {"label": "SL25", "algebra": "susy", "combo": [["1", "D3"], ["a", "D1"], ["eta1", "Y1"]],
     "constraints": "a != 0"},
    {"label": "SL26", "algebra": "susy", "combo": [["1", "D2"], ["eps", "B"], ["eta2", "Y2"]],
     "constraints": "eps = +-1"},
    {"label": "SL27", "algebra": "susy", "combo": [["1", "D3"], ["eps", "B"], ["eta1", "Y1"]],
     "constraints": "eps = +-1"},
    {"label": "SL28", "algebra": "susy", "combo": [["1", "B"], ["eps", "P0"], ["eta1", "Y1"], ["eta2", "Y2"]],
     "constraints": "eps = +-1"}
  ]
})JSON";
}

}  // namespace hydrosym
