#pragma once

// Power operations on class functions.
//
//   P_m(f)([alpha], +H_i)          = prod_i f([alpha phi_{H_i}^*]) . phi_{H_i}     on G x S_m
//   PP_m(f)(+(H_i, [alpha_i]))     = prod_i f([alpha_i psi_{H_i}^*]) . phi_{H_i}   on G wr S_m
//
// A class of G x S_m is a pair (class of the G-part, class of the S_m-part);
// the S_m-part is read as a sum of subgroups.

#include "hkr/bijections.hpp"
#include "hkr/class_function.hpp"
#include "hkr/isogeny.hpp"

namespace hkr {

/// floor(log_p m): the largest kernel exponent a sum of total m can need.
unsigned kernel_bound_for(std::uint64_t p, std::uint32_t m);

class PowerOperation {
 public:
  /// Throws LevelMismatch if the level is too coarse, SectionOutOfRange if
  /// the section misses a subgroup that occurs.
  PowerOperation(HomClassesPtr source, C0SpacePtr space, std::uint32_t m, const Section& phi);

  const HomClassesPtr& source() const { return source_; }
  /// Classes of G x S_m.
  const HomClassesPtr& target() const { return target_; }
  std::uint32_t m() const { return m_; }

  ClassFunction operator()(const ClassFunction& f) const;

 private:
  struct Factor {
    std::size_t source_class;
    std::size_t action;  // index into actions_
  };

  HomClassesPtr source_;
  HomClassesPtr target_;
  C0SpacePtr space_;
  std::uint32_t m_;
  std::vector<std::vector<Factor>> plan_;
  std::vector<std::vector<std::uint32_t>> actions_;
};

class TotalPowerOperation {
 public:
  TotalPowerOperation(HomClassesPtr source, C0SpacePtr space, std::uint32_t m, const Section& phi);

  const HomClassesPtr& source() const { return source_; }
  /// Classes of G wr S_m.
  const HomClassesPtr& target() const { return target_; }
  std::uint32_t m() const { return m_; }

  ClassFunction operator()(const ClassFunction& f) const;

 private:
  struct Factor {
    std::size_t source_class;
    std::size_t action;
  };

  HomClassesPtr source_;
  HomClassesPtr target_;
  C0SpacePtr space_;
  std::uint32_t m_;
  std::vector<std::vector<Factor>> plan_;
  std::vector<std::vector<std::uint32_t>> actions_;
};

ClassFunction power_op(const ClassFunction& f, std::uint32_t m, const Section& phi);
ClassFunction total_power_op(const ClassFunction& f, std::uint32_t m, const Section& phi);

}  // namespace hkr
