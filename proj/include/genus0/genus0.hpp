#pragma once

#include "genus0/rational.hpp"
#include "genus0/group.hpp"
#include "genus0/constructors.hpp"
#include "genus0/subgroups.hpp"
#include "genus0/signature.hpp"
#include "genus0/generating_vector.hpp"
#include "genus0/quotients.hpp"
#include "genus0/classify.hpp"
#include "genus0/verify.hpp"
#include "genus0/group_io.hpp"
#include "genus0/json_io.hpp"
