#!/usr/bin/env python3
"""
Cross-checking computed counts against OEIS b-files.

The comparison never trusts the published offset: the computed n=1 term is
anchored on every equal entry and the longest verified run of consecutive
entries wins.  A bundled snapshot of A224295 keeps everything working
offline; with network access the real b-file is fetched and cached.
"""
from shapewilf import avoider_counts, parse_pattern_set
from shapewilf.oeis import align_and_compare, fetch_sequence

seq = fetch_sequence("A224295", offline=True)
print(f"A224295 ({seq.provenance}): {seq.values()[:8]} ...")

counts = avoider_counts(parse_pattern_set("{12345,12354}"), 8)
report = align_and_compare(counts, seq)
print(f"\ncomputed Av_n({{12345,12354}}) for n<=8: {counts}")
print(f"matched prefix: {report.matched_prefix_length} terms, "
      f"aligned at b-file index {report.alignment_offset}")

# the conjectured companion class produces the same numbers
counts2 = avoider_counts(parse_pattern_set("{13452,23451}"), 8)
report2 = align_and_compare(counts2, seq)
print(f"\ncomputed Av_n({{13452,23451}}) for n<=8: {counts2}")
print(f"matched prefix: {report2.matched_prefix_length} terms (evidence, not proof)")

# a wrong sequence is flagged at the first divergent term
catalan = [1, 2, 5, 14, 42, 132, 429]
bad = align_and_compare(catalan, seq)
print(f"\nCatalan numbers vs A224295: matched {bad.matched_prefix_length} terms, "
      f"first mismatch {bad.first_mismatch}")
