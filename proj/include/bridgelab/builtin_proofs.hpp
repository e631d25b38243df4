/*!
  \file builtin_proofs.hpp
  \brief The Bridge derivations, Jacquette's argument and Church's exercise as proof scripts
*/

#pragma once

#include <bridgelab/proof.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bridgelab
{

namespace detail
{

struct builtin_script
{
  std::string_view name;
  std::string_view text;
};

/* Reasoning by cases on Fut Pun(a): the decree and Says(a,b) yield a contradiction. */
inline constexpr std::string_view bridge_future_script = R"(proof bridge-future
domain a
name b := Fut Pun(a)
define fp := forall x. forall y. Says(x,y) -> (~True(y) -> Fut Pun(x))
define tp := forall x. forall y. Says(x,y) -> (True(y) -> ~Fut Pun(x))
define phi := tp & fp
transparent
premise Fut Pun(a) | ~Fut Pun(a)
premise phi
premise Says(a,b)

s1: OrE [s2, s3, s12] {h1, h2} Fut Pun(a) & ~Fut Pun(a)
  s2: Premise Fut Pun(a) | ~Fut Pun(a)
  s3: AndI [s4, s5] Fut Pun(a) & ~Fut Pun(a)
    s4: Hyp {h1} Fut Pun(a)
    s5: CondE [s6, s10] ~Fut Pun(a)
      s6: CondE [s7, s9] True(b) -> ~Fut Pun(a)
        s7: ForallE [s8] Says(a,b) -> (True(b) -> ~Fut Pun(a))
          s8: AndE [s8p] tp
            s8p: Premise phi
        s9: Premise Says(a,b)
      s10: Tr [s11] True(b)
        s11: Hyp {h1} Fut Pun(a)
  s12: AndI [s13, s21] Fut Pun(a) & ~Fut Pun(a)
    s13: CondE [s14, s19] Fut Pun(a)
      s14: CondE [s15, s18] ~True(b) -> Fut Pun(a)
        s15: ForallE [s16] Says(a,b) -> (~True(b) -> Fut Pun(a))
          s16: AndE [s17] fp
            s17: Premise phi
        s18: Premise Says(a,b)
      s19: NegTr [s20] ~True(b)
        s20: Hyp {h2} ~Fut Pun(a)
    s21: Hyp {h2} ~Fut Pun(a)
)";

/* The same contradiction, reasoning by cases on True(b). */
inline constexpr std::string_view bridge_truth_script = R"(proof bridge-truth
domain a
name b := Fut Pun(a)
define fp := forall x. forall y. Says(x,y) -> (~True(y) -> Fut Pun(x))
define tp := forall x. forall y. Says(x,y) -> (True(y) -> ~Fut Pun(x))
define phi := tp & fp
transparent
premise True(b) | ~True(b)
premise phi
premise Says(a,b)

s1: OrE [s2, s3, s12] {h1, h2} True(b) & ~True(b)
  s2: Premise True(b) | ~True(b)
  s3: AndI [s4, s5] True(b) & ~True(b)
    s4: Hyp {h1} True(b)
    s5: NegTr [s6] ~True(b)
      s6: CondE [s7, s11] ~Fut Pun(a)
        s7: CondE [s8, s10] True(b) -> ~Fut Pun(a)
          s8: ForallE [s9] Says(a,b) -> (True(b) -> ~Fut Pun(a))
            s9: AndE [s9p] tp
              s9p: Premise phi
          s10: Premise Says(a,b)
        s11: Hyp {h1} True(b)
  s12: AndI [s13, s21] True(b) & ~True(b)
    s13: Tr [s14] True(b)
      s14: CondE [s15, s20] Fut Pun(a)
        s15: CondE [s16, s19] ~True(b) -> Fut Pun(a)
          s16: ForallE [s17] Says(a,b) -> (~True(b) -> Fut Pun(a))
            s17: AndE [s18] fp
              s18: Premise phi
          s19: Premise Says(a,b)
        s20: Hyp {h2} ~True(b)
    s21: Hyp {h2} ~True(b)
)";

/* Buridan: with excluded middle for Fut Pun(a) and Says(a,b), the decree is refuted. */
inline constexpr std::string_view buridan_reductio_script = R"(proof buridan-reductio
domain a
name b := Fut Pun(a)
define fp := forall x. forall y. Says(x,y) -> (~True(y) -> Fut Pun(x))
define tp := forall x. forall y. Says(x,y) -> (True(y) -> ~Fut Pun(x))
define phi := tp & fp
transparent
premise Fut Pun(a) | ~Fut Pun(a)
premise Says(a,b)

r1: Reductio [r2] {d} ~phi
  r2: EFQ [s1] _|_
    s1: OrE [s2, s3, s12] {h1, h2} Fut Pun(a) & ~Fut Pun(a)
      s2: Premise Fut Pun(a) | ~Fut Pun(a)
      s3: AndI [s4, s5] Fut Pun(a) & ~Fut Pun(a)
        s4: Hyp {h1} Fut Pun(a)
        s5: CondE [s6, s10] ~Fut Pun(a)
          s6: CondE [s7, s9] True(b) -> ~Fut Pun(a)
            s7: ForallE [s8] Says(a,b) -> (True(b) -> ~Fut Pun(a))
              s8: AndE [s8p] tp
                s8p: Hyp {d} phi
            s9: Premise Says(a,b)
          s10: Tr [s11] True(b)
            s11: Hyp {h1} Fut Pun(a)
      s12: AndI [s13, s21] Fut Pun(a) & ~Fut Pun(a)
        s13: CondE [s14, s19] Fut Pun(a)
          s14: CondE [s15, s18] ~True(b) -> Fut Pun(a)
            s15: ForallE [s16] Says(a,b) -> (~True(b) -> Fut Pun(a))
              s16: AndE [s17] fp
                s17: Hyp {d} phi
            s18: Premise Says(a,b)
          s19: NegTr [s20] ~True(b)
            s20: Hyp {h2} ~Fut Pun(a)
        s21: Hyp {h2} ~Fut Pun(a)
)";

/* Jacquette: True(b) <-> ~True(b), hence b is neither true nor false simpliciter. */
inline constexpr std::string_view jacquette_script = R"(proof jacquette
domain a
name b := Fut Pun(a)
define fp := forall x. forall y. Says(x,y) -> (~True(y) -> Fut Pun(x))
define tp := forall x. forall y. Says(x,y) -> (True(y) -> ~Fut Pun(x))
define phi := tp & fp
transparent
premise phi
premise Says(a,b)

j1: SRule [j2] ~Simp True(b) & ~Simp ~True(b)
  j2: BicondI [j3, j12] True(b) <-> ~True(b)
    j3: CondI [j4] {h1} True(b) -> ~True(b)
      j4: NegTr [j5] ~True(b)
        j5: CondE [j6, j11] ~Fut Pun(a)
          j6: CondE [j7, j10] True(b) -> ~Fut Pun(a)
            j7: ForallE [j8] Says(a,b) -> (True(b) -> ~Fut Pun(a))
              j8: AndE [j9] tp
                j9: Premise phi
            j10: Premise Says(a,b)
          j11: Hyp {h1} True(b)
    j12: CondI [j13] {h2} ~True(b) -> True(b)
      j13: Tr [j14] True(b)
        j14: CondE [j15, j20] Fut Pun(a)
          j15: CondE [j16, j19] ~True(b) -> Fut Pun(a)
            j16: ForallE [j17] Says(a,b) -> (~True(b) -> Fut Pun(a))
              j17: AndE [j18] fp
                j18: Premise phi
            j19: Premise Says(a,b)
          j20: Hyp {h2} ~True(b)
)";

/* Excluded middle for True(b) refuted from the decree and Says(a,b). */
inline constexpr std::string_view lem_reductio_script = R"(proof lem-reductio
domain a
name b := Fut Pun(a)
define fp := forall x. forall y. Says(x,y) -> (~True(y) -> Fut Pun(x))
define tp := forall x. forall y. Says(x,y) -> (True(y) -> ~Fut Pun(x))
define phi := tp & fp
transparent
premise phi
premise Says(a,b)

r1: Reductio [r2] {lem} ~(True(b) | ~True(b))
  r2: EFQ [s1] _|_
    s1: OrE [s2, s3, s12] {h1, h2} True(b) & ~True(b)
      s2: Hyp {lem} True(b) | ~True(b)
      s3: AndI [s4, s5] True(b) & ~True(b)
        s4: Hyp {h1} True(b)
        s5: NegTr [s6] ~True(b)
          s6: CondE [s7, s11] ~Fut Pun(a)
            s7: CondE [s8, s10] True(b) -> ~Fut Pun(a)
              s8: ForallE [s9] Says(a,b) -> (True(b) -> ~Fut Pun(a))
                s9: AndE [s9p] tp
                  s9p: Premise phi
              s10: Premise Says(a,b)
            s11: Hyp {h1} True(b)
      s12: AndI [s13, s21] True(b) & ~True(b)
        s13: Tr [s14] True(b)
          s14: CondE [s15, s20] Fut Pun(a)
            s15: CondE [s16, s19] ~True(b) -> Fut Pun(a)
              s16: ForallE [s17] Says(a,b) -> (~True(b) -> Fut Pun(a))
                s17: AndE [s18] fp
                  s18: Premise phi
              s19: Premise Says(a,b)
            s20: Hyp {h2} ~True(b)
        s21: Hyp {h2} ~True(b)
)";

/* Church's propositional version: P crosses, Q hanged, R utterance true, S law obeyed. */
inline constexpr std::string_view church_script = R"(proof church
premise R <-> (P & Q)
premise P
premise S -> (Q <-> (P & ~R))

c1: CondE [c2, c7] ~S
  c2: CondE [c3, c6] (S -> (Q <-> (P & ~R))) -> ~S
    c3: CondE [c4, c5] P -> ((S -> (Q <-> (P & ~R))) -> ~S)
      c4: Taut (R <-> (P & Q)) -> (P -> ((S -> (Q <-> (P & ~R))) -> ~S))
      c5: Premise R <-> (P & Q)
    c6: Premise P
  c7: Premise S -> (Q <-> (P & ~R))
)";

inline constexpr std::array<builtin_script, 6> builtin_scripts{ {
    { "bridge-future", bridge_future_script },
    { "bridge-truth", bridge_truth_script },
    { "buridan-reductio", buridan_reductio_script },
    { "jacquette", jacquette_script },
    { "lem-reductio", lem_reductio_script },
    { "church", church_script },
} };

} // namespace detail

inline std::array<std::string_view, 6> builtin_proof_names()
{
  std::array<std::string_view, 6> out{};
  for ( std::size_t i = 0; i < out.size(); ++i )
    out[i] = detail::builtin_scripts[i].name;
  return out;
}

/*! \brief Script text of a built-in proof; throws `std::invalid_argument` for unknown names. */
inline std::string_view builtin_proof_script( std::string_view name )
{
  for ( auto const& b : detail::builtin_scripts )
  {
    if ( b.name == name )
      return b.text;
  }
  throw std::invalid_argument( "unknown built-in proof '" + std::string( name ) + "'" );
}

inline proof builtin_proof( std::string_view name ) { return parse_proof( builtin_proof_script( name ) ); }

} // namespace bridgelab
