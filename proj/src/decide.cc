#include "circmagic/decide.h"

namespace circmagic {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "?";
}

std::string to_string(NoReason r) {
  switch (r) {
    case NoReason::kNone:
      return "none";
    case NoReason::kEmptyKernel:
      return "empty-kernel";
    case NoReason::kCommonDivisor:
      return "common-divisor";
    case NoReason::kTheoremType1:
      return "theorem-type1";
    case NoReason::kTheoremType2:
      return "theorem-type2";
    case NoReason::kType3Necessary:
      return "type3-necessary";
    case NoReason::kSearchExhausted:
      return "search-exhausted";
  }
  return "?";
}

DmVerdict decide(const ConnectionSet& s, const DecideOptions& options) {
  if (!s.connected()) throw DomainError("decide: " + s.to_string() + " is disconnected");
  DmVerdict v;
  auto settle = [&v](int step, Verdict status, NoReason reason = NoReason::kNone) {
    v.step = step;
    v.status = status;
    v.reason = reason;
    return v;
  };

  const auto chars = admissible_set(s);
  v.filter = candidate_filter(s, chars);
  if (!v.filter.passed()) {
    return settle(1, Verdict::kNo,
                  v.filter.kind == FilterResult::Kind::kEmpty ? NoReason::kEmptyKernel
                                                              : NoReason::kCommonDivisor);
  }

  v.profile = tag_profile(chars);

  if (v.profile.all_t1) {
    v.family = recognize(s, FamilyFilter::kType1);
    return v.family ? settle(3, Verdict::kYes) : settle(3, Verdict::kNo, NoReason::kTheoremType1);
  }

  if (v.profile.all_t2) {
    if (s.n() % 2 != 0) v.family = recognize(s, FamilyFilter::kType2);
    return v.family ? settle(4, Verdict::kYes) : settle(4, Verdict::kNo, NoReason::kTheoremType2);
  }

  if (v.profile.any_t3) {
    v.type3 = type3_necessary(s, chars);
    if (!v.type3->passed()) return settle(5, Verdict::kNo, NoReason::kType3Necessary);
  }

  // Mixed profile. The lexicographic products are settled by their known
  // status before falling back to search.
  if (auto rec = recognize(s, FamilyFilter::kTrivial)) {
    const bool dm = family_is_distance_magic(rec->family);
    v.family = std::move(rec);
    return dm ? settle(6, Verdict::kYes) : settle(6, Verdict::kNo, NoReason::kTheoremType2);
  }

  SearchOptions so = options.search;
  so.prefilter = false;
  auto out = search_labeling(s, options.budget, so);
  v.search = out.stats;
  switch (out.kind) {
    case SearchOutcome::Kind::kFound:
      v.labeling = std::move(out.labeling);
      return settle(6, Verdict::kYes);
    case SearchOutcome::Kind::kExhausted:
      return settle(6, Verdict::kNo, NoReason::kSearchExhausted);
    case SearchOutcome::Kind::kBudgetExceeded:
      break;
  }
  return settle(6, Verdict::kUnknown);
}

}  // namespace circmagic
