#include "patternforge/builtin_patterns.hpp"

#include "patternforge/pattern_parser.hpp"

namespace patternforge {

namespace {

// W1/W2: the two V4s tied by starred D edges to the shared V2 pair (T21, T22).
// V3 bridges them with B edges. X is the root: one E edge to a V5, a starred
// A edge to another V1, an F edge arriving from a V2, and three C edges to
// distinct V4s, one of which V3 also reaches. The green check ties the A-edge
// property to some V4's first property; the red check ties T21 and T22
// through their key property.
constexpr std::string_view kAgileLite = R"(% built-in root query
root X.
sub sub1: edgeD(W1, T21, 1), edgeD(W1, T22, 1), vertex4(_, W1, _).
sub sub2: edgeD(W2, T21, 1), edgeD(W2, T22, 1), vertex4(_, W2, _),
          neq(W1, W2), edgeB(V3, W1), edgeB(V3, W2), vertex3(V3).
sub sub3: vertex1(X), edgeE(X, S5), vertex5(S5), edgeA(X, Y1, Pa),
          vertex4(Pg, G4, _), green(Pa, Pg).
sub sub4: edgeF(Z2, X), vertex2(Z2, _, _).
sub sub5: edgeA(X, Y1, Pa), eq(Pa, 1), vertex1(Y1).
sub sub6: edgeC(X, U1), edgeC(X, U2), edgeC(X, U3),
          vertex4(_, U1, _), vertex4(_, U2, _), vertex4(_, U3, _),
          neq(U1, U2), neq(U1, U3), neq(U2, U3),
          edgeB(V3, U1), red(T21, T22).
)";

} // namespace

std::string_view agile_lite_source() { return kAgileLite; }

const Pattern& builtin_agile_lite() {
    static const Pattern pattern = parse_pattern(kAgileLite);
    return pattern;
}

} // namespace patternforge
