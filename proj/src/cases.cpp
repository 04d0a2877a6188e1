#include "emot/cases.hpp"

namespace emot {

const std::vector<CaseSpec>& quality_cases() {
    static const std::vector<CaseSpec> kCases = {
        {"bengt", "Clinical reasoning: Patient Bengt",
         "A 76-year-old man presents with twelve months of progressive multi-system decline: "
         "headache, dizziness with falls, increasing forgetfulness, fatigue, weakness, poor "
         "appetite, nausea, and a cough. History: type 2 diabetes managed with metformin "
         "(HbA1c 52 mmol/mol, reasonably well controlled). He had been on B12 and folate "
         "supplementation, stopped about twelve months ago when the pharmacy's supply was "
         "disrupted. Laboratory results: B12 291 pmol/L (reference 150-750 pmol/L; values "
         "150-300 pmol/L are clinically ambiguous), folate 8 nmol/L.\n"
         "Identify the most likely diagnosis, list the essential investigations that would "
         "confirm it, and propose a management plan.",
         std::nullopt, "clinical"},
        {"climate", "Policy design: climate migration",
         "Design a comprehensive global strategy for climate-driven displacement projected to "
         "exceed 200 million people by 2050. The strategy must cover: (a) international legal "
         "frameworks; (b) economic mechanisms for managed relocation; (c) integration of "
         "displaced populations; (d) political feasibility across different governance "
         "systems; (e) environmental monitoring and early warning; and (f) cultural "
         "preservation during displacement.",
         std::nullopt, "policy"},
        {"vaccine", "AI governance: pandemic vaccine prioritisation",
         "Design an evidence-based AI policy model for vaccine prioritisation and distribution "
         "during a pandemic. The model must balance: (a) epidemiological optimisation; (b) "
         "equity across demographic groups; (c) supply chain constraints; (d) public trust and "
         "acceptance; (e) real-time adaptation to emerging variants; and (f) international "
         "coordination.",
         std::nullopt, "governance"},
        {"erik", "Diagnostic complexity: Patient Erik",
         "A 71-year-old retired shipyard electrician presents with worsening exertional "
         "dyspnoea, palpitations, 4 kg weight loss over six weeks, tremor, heat intolerance, "
         "and emotional lability. Timeline: paroxysmal atrial fibrillation diagnosed 18 months "
         "ago, controlled on amiodarone 200 mg daily; CT pulmonary angiography with iodinated "
         "contrast four months ago (PE excluded); three months ago his wife started him on "
         "kelp-based thyroid-support supplements (~500 mcg iodine/day, undisclosed); two weeks "
         "ago the GP read recurrent AF as amiodarone failure, doubled the dose to 400 mg and "
         "added digoxin 125 mcg. Examination: HR 138, BP 154/68 (wide pulse pressure), fine "
         "tremor, lid lag, mild proptosis, warm moist skin, hyperreflexia, raised JVP, "
         "bilateral oedema, bibasal crackles. Laboratory: TSH <0.01 mU/L, fT4 58 pmol/L (ref "
         "12-22), fT3 18.2 pmol/L (ref 3.1-6.8), BNP 890 pg/mL, IL-6 28 pg/mL, thyroid "
         "antibodies negative. Thyroid ultrasound shows decreased Doppler vascularity.\n"
         "What is the underlying diagnosis, what caused it, and what immediate management "
         "changes are required?",
         std::nullopt, "clinical"},
    };
    return kCases;
}

const std::vector<CaseSpec>& accuracy_problems() {
    static const std::vector<CaseSpec> kProblems = {
        {"math-1", "Bolts of fiber",
         "A robe takes 2 bolts of blue fiber and half that much white fiber. How many bolts "
         "does it take in total?",
         "3", "math"},
        {"math-2", "Apple arithmetic",
         "Sara has 31 apples. She gives away 17 and then buys 12 more. How many apples does "
         "she have now?",
         "26", "math"},
        {"math-3", "Train distance",
         "A train covers 60 km in 40 minutes. At the same speed, how many km does it cover in "
         "2 hours?",
         "180", "math"},
        {"logic-1", "Syllogism",
         "All bloops are razzies. All razzies are lazzies. Is every bloop necessarily a "
         "lazzie? Answer yes or no.",
         "yes", "logic"},
        {"logic-2", "Modus tollens",
         "If it rains, the match is cancelled. The match was not cancelled. Did it rain? "
         "Answer yes or no.",
         "no", "logic"},
        {"logic-3", "Ordering",
         "Ann is taller than Ben. Ben is taller than Cal. Who is the shortest of the three?",
         "cal", "logic"},
        {"multiqa-1", "Astronomer's birthplace",
         "The astronomer who first placed the Sun at the centre of the planetary system in a "
         "1543 book was born in which present-day country?",
         "poland", "multiqa"},
        {"multiqa-2", "Moon and letters",
         "Which planet is orbited by the moon Titan, and how many letters are in that "
         "planet's name? Answer as '<planet> <count>'.",
         "saturn 6", "multiqa"},
        {"multiqa-3", "Flag capital",
         "What is the capital city of the country whose flag features a single red maple "
         "leaf?",
         "ottawa", "multiqa"},
        {"planning-1", "Laundry schedule",
         "Laundry must be washed (30 minutes), then dried (60 minutes), then folded (10 "
         "minutes), strictly in that order. Starting at 2:00 PM, when are you finished? "
         "Answer like '3:40 PM'.",
         "3:40 pm", "planning"},
        {"planning-2", "Oven timing",
         "Baking takes 25 minutes and cannot start until both the oven is preheated (10 "
         "minutes) and the batter is mixed (15 minutes). Mixing can happen while the oven "
         "preheats. What is the minimum total time in minutes from start to finished bake?",
         "40", "planning"},
        {"planning-3", "Meeting gap",
         "You are busy in meetings 9:00-9:30 and 10:00-11:00. A task needs an uninterrupted "
         "free 30 minutes, must finish by 11:00, and cannot start before 9:00. At what time "
         "must it start? Answer like '9:30'.",
         "9:30", "planning"},
        {"bbh-1", "Animal count",
         "Count how many words in this list name animals: otter, granite, heron, basalt, "
         "lynx.",
         "3", "bbh"},
        {"bbh-2", "Cup tracking",
         "A ball starts under cup 1. Swap cups 1 and 3. Then swap cups 2 and 3. Which cup "
         "hides the ball now?",
         "2", "bbh"},
        {"bbh-3", "Boolean expression",
         "Evaluate: not (True and False) or False. Answer True or False.",
         "true", "bbh"},
    };
    return kProblems;
}

const CaseSpec* find_case(const std::string& id) {
    for (const auto& c : quality_cases()) {
        if (c.id == id) return &c;
    }
    for (const auto& c : accuracy_problems()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

}  // namespace emot
