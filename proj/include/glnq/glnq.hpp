// glnq.hpp -- umbrella header.

#pragma once

#include "glnq/arith.hpp"
#include "glnq/bigint.hpp"
#include "glnq/budget.hpp"
#include "glnq/cache.hpp"
#include "glnq/chartable.hpp"
#include "glnq/conjugacy.hpp"
#include "glnq/crosscheck.hpp"
#include "glnq/cyclotomic.hpp"
#include "glnq/distinction.hpp"
#include "glnq/dixon.hpp"
#include "glnq/errors.hpp"
#include "glnq/fq.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/geometry.hpp"
#include "glnq/group.hpp"
#include "glnq/induction.hpp"
#include "glnq/involution.hpp"
#include "glnq/lr.hpp"
#include "glnq/matrix.hpp"
#include "glnq/parabolic.hpp"
#include "glnq/parallel.hpp"
#include "glnq/partitions.hpp"
#include "glnq/psh.hpp"
#include "glnq/rational.hpp"
