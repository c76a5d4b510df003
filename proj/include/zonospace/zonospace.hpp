#pragma once

#include "zonospace/body.hpp"
#include "zonospace/campaign.hpp"
#include "zonospace/error.hpp"
#include "zonospace/inequalities.hpp"
#include "zonospace/io.hpp"
#include "zonospace/lifted.hpp"
#include "zonospace/oracle.hpp"
#include "zonospace/random.hpp"
#include "zonospace/rkhs.hpp"
#include "zonospace/svg.hpp"
