#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "branchcalc/multisegment.hpp"

namespace branchcalc {

// ---------------------------------------------------------------------------
// Bernstein-Zelevinsky filtration of the restriction G_{n+1} -> G_n.

struct FiltrationLayer {
  int index = 0;
  Side side = Side::Right;
  /// nu^{+1/2} rep^{(i+1)} for the mirabolic filtration (Right), or
  /// nu^{-1/2} {}^{(i+1)}rep for the transposed one (Left).
  FormalSum payload;
  /// The last layer is induced from the Gelfand-Graev representation.
  bool bottom = false;
};

/// Layers i = 0..n for a representation of degree n+1. Layer 0 is the top quotient.
std::vector<FiltrationLayer> bz_filtration(const InducedRep& rep, Side side);

// ---------------------------------------------------------------------------
// Quotient obstruction for St(D) -> <m2>.

/// Supports of generic subquotients of the i-th `side` derivative of
/// <D1> x ... x <Dk>: each Dj has relative length one or two, and exactly
/// the length-two members (plus possibly singletons) are truncated once.
std::vector<Multisegment> generic_subquotients_of_derivative(const Multisegment& m2, int i,
                                                             Side side);

enum class QuotientMode {
  Plain,    ///< evaluate the compatibility test for any Zelevinsky datum
  Theorem,  ///< additionally require m2 to be degenerate
};

struct CompatibilityWitness {
  int i = 0;
  Support support;           ///< support of the twisted derivative of St(D)
  Multisegment subquotient;  ///< matching generic subquotient datum of <m2>
};

struct QuotientCertificate {
  Segment delta;
  Multisegment m2;
  bool obstructed = false;
  std::vector<CompatibilityWitness> right;  ///< Hom(nu^{1/2} St(D)^{(i+1)}, {}^{(i)}<m2>) candidates
  std::vector<CompatibilityWitness> left;   ///< Hom(nu^{-1/2} {}^{(i+1)}St(D), <m2>^{(i)}) candidates
};

/// <m2> can be a quotient of St(D) only if both right and left candidate lists
/// are nonempty; otherwise the certificate is OBSTRUCTED. Requires
/// abs_length(D) == degree(m2) + 1.
QuotientCertificate quotient_obstruction(const Segment& delta, const Multisegment& m2,
                                         QuotientMode mode = QuotientMode::Plain);

// ---------------------------------------------------------------------------
// Ext-vanishing certificates for St(m1) -> St(m2), both generic.

/// Number of support points of m1 on lines that occur in m2.
int m_count(const Multisegment& m1, const Multisegment& m2);

/// Supports of the terms of the i-th derivatives of St(m2), cached per (i, side).
class SpectraTable {
 public:
  explicit SpectraTable(const Multisegment& m2);
  const Multisegment& m2() const { return m2_; }
  /// Supports of St(m2)^{(i)} (Right) or {}^{(i)}St(m2) (Left); empty when i > degree.
  const std::set<Support>& derivative_spectra(int i, Side side) const;

 private:
  Multisegment m2_;
  std::vector<std::set<Support>> right_;
  std::vector<std::set<Support>> left_;
};

enum class CertificateKind { Base, Step, Fail };
const char* to_string(CertificateKind k);

struct SpectrumWitness {
  int i = 0;
  std::vector<Support> pi_side;  ///< spectra of nu^{+-1/2}(St(D) x derivative of pi)
  std::vector<Support> m2_side;  ///< spectra of the matching derivative of St(m2)
};

struct Collision {
  Side variant = Side::Right;
  int i = 0;
  Support support;
};

struct Certificate {
  CertificateKind kind = CertificateKind::Base;
  Multisegment m1;
  int m_count = 0;
  std::optional<Segment> delta;
  std::optional<Side> variant;
  std::vector<SpectrumWitness> witnesses;
  std::optional<CuspidalLine> fresh_line;
  std::vector<Certificate> children;
  // FAIL nodes
  std::vector<Collision> collisions;
  std::optional<std::pair<Segment, Segment>> linked_pair;
  std::string extraction;  ///< "truncation-argument", "recombination-scan" or ""
};

enum class DeltaChoice { Shortest, Longest };

struct CertifyOptions {
  bool record_witnesses = true;
  /// Longest is an experiment knob; the recursion is only known to work with Shortest.
  DeltaChoice delta_choice = DeltaChoice::Shortest;
  /// Harness mode: accept a non-generic m2 to exercise the FAIL extractor.
  bool require_generic_m2 = true;
};

struct ExtCertificate {
  Certificate root;
  Multisegment m2;
  LineRegistry lines;  ///< input lines plus the fresh ones allocated during the run
};

/// Recursive certificate: BASE when m_count is zero; otherwise a STEP that
/// removes a shortest segment D of m1 on a line of m2, checks one variant of
/// the spectra-disjointness bullets for every feasible i, and recurses on
/// {rho'} + {-D} + (m1 - D) with rho' cuspidal on a fresh line. FAIL when both
/// variants collide. Throws DomainError on non-generic input.
ExtCertificate ext_vanishing_certificate(const Multisegment& m1, const Multisegment& m2,
                                         const LineRegistry& lines,
                                         const CertifyOptions& options = {});
/// Same with precomputed spectra of m2 (for harness loops).
ExtCertificate ext_vanishing_certificate(const Multisegment& m1, const SpectraTable& m2_spectra,
                                         const LineRegistry& lines,
                                         const CertifyOptions& options = {});

bool has_fail(const Certificate& c);
const Certificate* first_fail(const Certificate& c);
/// Number of recursion edges on the longest root-to-leaf path.
int depth(const Certificate& c);

/// Given colliding variants at segment D, exhibits a linked pair in m2.
/// Prefers the pair forced by the truncation argument (a segment of m2
/// starting at a+1/2 and one ending at b-1/2, both of relative length >=
/// rel(D)); falls back to the first pair rewritten by recombination of m2.
std::optional<std::pair<Segment, Segment>> extract_linked_pair(const Segment& delta,
                                                               const Multisegment& m2,
                                                               std::string* how = nullptr);

/// Spectra of m2 packed into short strings for verdict-only harness runs.
class PackedSpectra {
 public:
  explicit PackedSpectra(const Multisegment& m2);
  const Multisegment& m2() const { return m2_; }
  /// False when lines or exponents exceed the packed range.
  bool packable() const { return packable_; }

  struct Impl;
  const Impl& impl() const { return *impl_; }
  ~PackedSpectra();
  PackedSpectra(PackedSpectra&&) noexcept;

 private:
  Multisegment m2_;
  bool packable_ = true;
  std::unique_ptr<Impl> impl_;
};

struct ExtVerdict {
  bool fail = false;
  std::optional<Segment> fail_delta;  ///< the segment D at the FAIL node
  int depth = 0;
  int steps_right = 0;
  int steps_left = 0;
};

/// The decisions of ext_vanishing_certificate without building the tree.
/// Falls back to the full certificate when the input is not packable.
ExtVerdict ext_vanishing_verdict(const Multisegment& m1, const PackedSpectra& m2,
                                 DeltaChoice choice = DeltaChoice::Shortest);

// ---------------------------------------------------------------------------

/// Euler-Poincare pairing of two irreducibles: product of Whittaker dimensions.
int ep_pairing(const InducedRep& rep1, const InducedRep& rep2);

}  // namespace branchcalc
