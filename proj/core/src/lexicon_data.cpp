// Copyright 2025 The FairForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexicon_data.hpp"

namespace fairforge::detail {

// Bidirectional English tables. Columns: category, number, feminine,
// masculine, fair. Gendered columns may be empty where no such surface
// exists (generic "man" phrases, unnecessary feminine forms).
const char kBuiltinLexiconTsv[] = R"(pronoun	sg	she	he	they
pronoun	sg	her	his	their
pronoun	sg	her	him	them
pronoun	sg	hers	his	theirs
pronoun	sg	herself	himself	themself
job_title	sg	chairwoman	chairman	chairperson
job_title	pl	chairwomen	chairmen	chairpeople
job_title	sg	anchorwoman	anchorman	anchor
job_title	pl	anchorwomen	anchormen	anchors
job_title	sg	congresswoman	congressman	member of congress
job_title	pl	congresswomen	congressmen	members of congress
job_title	sg	policewoman	policeman	police officer
job_title	pl	policewomen	policemen	police officers
job_title	sg	spokeswoman	spokesman	spokesperson
job_title	pl	spokeswomen	spokesmen	spokespeople
job_title	sg	stewardess	steward	flight attendant
job_title	pl	stewardesses	stewards	flight attendants
job_title	sg	headmistress	headmaster	principal
job_title	pl	headmistresses	headmasters	principals
job_title	sg	businesswoman	businessman	business person
job_title	pl	businesswomen	businessmen	business persons
job_title	sg	postwoman	postman	mail carrier
job_title	pl	postwomen	postmen	mail carriers
job_title	sg	saleswoman	salesman	salesperson
job_title	pl	saleswomen	salesmen	salespersons
job_title	sg	firewoman	fireman	firefighter
job_title	pl	firewomen	firemen	firefighters
job_title	sg	barwoman	barman	bartender
job_title	pl	barwomen	barmen	bartenders
job_title	sg	cleaning lady	cleaning man	cleaner
job_title	pl	cleaning ladies	cleaning men	cleaners
job_title	sg	forewoman	foreman	supervisor
job_title	pl	forewomen	foremen	supervisors
generic_man	sg		average man	average person
generic_man	pl		average men	average people
generic_man	sg		best man for the job	best person for the job
generic_man	pl		best men for the job	best people for the job
generic_man	sg		layman	layperson
generic_man	pl		laymen	laypeople
generic_man	sg		man and wife	husband and wife
generic_man	sg		mankind	humankind
generic_man	sg		man-made	human-made
generic_man	sg		workmanlike	skillful
generic_man	sg		freshman	first-year student
feminine_form	sg	actress		actor
feminine_form	pl	actresses		actors
feminine_form	sg	heroine		hero
feminine_form	pl	heroines		heroes
feminine_form	sg	comedienne		comedian
feminine_form	pl	comediennes		comedians
feminine_form	sg	executrix		executor
feminine_form	pl	executrices		executors
feminine_form	sg	poetess		poet
feminine_form	pl	poetesses		poets
feminine_form	sg	usherette		usher
feminine_form	pl	usherettes		ushers
feminine_form	sg	authoress		author
feminine_form	pl	authoresses		authors
feminine_form	sg	boss lady		boss
feminine_form	pl	boss ladies		bosses
feminine_form	sg	waitress		waiter
feminine_form	pl	waitresses		waiters
)";

}  // namespace fairforge::detail
