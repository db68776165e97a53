#include "convoeval/pipeline.hpp"

// Built-in copies of the default data assets. data/ ships the same
// content as editable files; tests keep the two in sync.

namespace convoeval::pipeline {

const std::string& default_fluff_words() {
    static const std::string text = R"lex(i
me
my
myself
we
our
ours
ourselves
you
your
yours
yourself
yourselves
he
him
his
himself
she
her
hers
herself
it
its
itself
they
them
their
theirs
themselves
what
which
who
whom
this
that
these
those
am
is
are
was
were
be
been
being
have
has
had
having
do
does
did
doing
a
an
the
and
but
if
or
because
as
until
while
of
at
by
for
with
about
against
between
into
through
during
before
after
above
below
to
from
up
down
in
out
on
off
over
under
again
further
then
once
)lex";
    return text;
}

const std::string& default_sentiment_lexicon() {
    static const std::string text = R"lex(abandon	-0.7
abandoned	-0.7
abandoning	-0.7
abandonment	-0.7
abandonments	-0.7
abandons	-0.7
able	0.3
ably	0.3
absurd	-0.5
absurdly	-0.5
abundant	0.5
abundantly	0.5
abuse	-0.85
abused	-0.85
abuses	-0.85
abusing	-0.85
abusive	-0.85
abusively	-0.85
abysmal	-0.85
abysmally	-0.85
accept	0.45
acceptable	0.35
acceptance	0.5
accepted	0.45
accepting	0.45
accepts	0.45
accessible	0.35
accessibly	0.35
accomplish	0.6
accomplished	0.6
accomplishes	0.6
accomplishing	0.6
accomplishment	0.6
accomplishments	0.6
accurate	0.4
accurately	0.4
accusation	-0.6
accusations	-0.6
accuse	-0.6
accused	-0.6
accuses	-0.6
accusing	-0.6
ache	-0.55
ached	-0.55
aches	-0.55
achieve	0.6
achieved	0.6
achievement	0.6
achievements	0.6
achieves	0.6
achieving	0.6
aching	-0.55
active	0.35
actively	0.35
addict	-0.65
addicted	-0.7
addiction	-0.7
addictions	-0.7
addicts	-0.65
adequate	0.25
adequately	0.25
admirable	0.6
admiration	0.6
admirations	0.6
admire	0.6
admired	0.6
admires	0.6
admiring	0.6
adorable	0.7
adorably	0.7
adore	0.8
adored	0.8
adores	0.8
adoring	0.8
adventurous	0.5
adventurously	0.5
affection	0.65
affectionate	0.65
affectionately	0.65
affections	0.65
afraid	-0.65
aggression	-0.65
aggressions	-0.65
aggressive	-0.6
aggressively	-0.6
agitated	-0.55
agonies	-0.85
agonizing	-0.85
agony	-0.85
agree	0.4
agreeable	0.5
agreeably	0.5
agreed	0.4
agreeing	0.4
agreement	0.4
agreements	0.4
agrees	0.4
alive	0.45
alone	-0.5
alright	0.25
amazing	0.85
amused	0.5
amusement	0.5
amusements	0.5
amusing	0.5
angelic	0.6
angelically	0.6
anger	-0.7
angers	-0.7
angrily	-0.7
angry	-0.7
annoy	-0.5
annoyance	-0.5
annoyed	-0.55
annoying	-0.55
annoys	-0.5
anxieties	-0.65
anxiety	-0.65
anxious	-0.65
anxiously	-0.65
apologies	0.3
apologize	0.3
apologized	0.3
apologizes	0.3
apologizing	0.3
apology	0.3
appalling	-0.8
appealing	0.5
applaud	0.55
applauded	0.55
applauding	0.55
applauds	0.55
appreciate	0.6
appreciated	0.6
appreciates	0.6
appreciating	0.6
appreciation	0.6
appreciations	0.6
approachable	0.5
approachably	0.5
approval	0.5
approvals	0.5
approve	0.5
approved	0.5
approves	0.5
approving	0.5
apt	0.3
aptly	0.3
argue	-0.5
argued	-0.5
argues	-0.5
arguing	-0.5
argument	-0.5
arguments	-0.5
arrogance	-0.6
arrogant	-0.6
arrogantly	-0.6
ashamed	-0.7
assault	-0.8
assaulted	-0.8
assaulting	-0.8
assaults	-0.8
assure	0.45
assured	0.45
assures	0.45
assuring	0.45
astonish	0.4
astonished	0.4
astonishes	0.4
astonishing	0.4
atrocious	-0.85
atrociously	-0.85
attack	-0.65
attacked	-0.65
attacking	-0.65
attacks	-0.65
attentive	0.5
attentively	0.5
attractive	0.55
attractively	0.55
authentic	0.55
authentically	0.55
avail	0.2
availed	0.2
availing	0.2
avails	0.2
avoid	-0.35
avoidance	-0.4
avoided	-0.35
avoiding	-0.35
avoids	-0.35
awake	0.1
awesome	0.8
awesomely	0.8
awful	-0.8
awfully	-0.8
awkward	-0.45
awkwardly	-0.45
backward	-0.3
bad	-0.6
balance	0.4
balanced	0.5
balances	0.4
balancing	0.4
banish	-0.5
banished	-0.5
banishes	-0.5
banishing	-0.5
bargain	0.3
bargains	0.3
barren	-0.5
barrenly	-0.5
bash	-0.5
bashed	-0.5
bashes	-0.5
bashing	-0.5
beauties	0.6
beautiful	0.7
beautifully	0.7
beauty	0.6
beg	-0.4
belittle	-0.6
belittled	-0.6
belittles	-0.6
belittling	-0.6
belong	0.45
belonged	0.45
belonging	0.45
belongs	0.45
beloved	0.7
beneficial	0.55
beneficially	0.55
benefit	0.5
benefited	0.5
benefiting	0.5
benefits	0.5
benevolent	0.65
benevolently	0.65
berate	-0.6
berated	-0.6
berates	-0.6
berating	-0.6
best	0.65
betray	-0.75
betrayal	-0.75
betrayals	-0.75
betrayed	-0.75
betraying	-0.75
betrays	-0.75
better	0.4
betterment	0.5
betterments	0.5
bicker	-0.5
bickered	-0.5
bickering	-0.5
bickers	-0.5
bitter	-0.6
bitterly	-0.6
bitterness	-0.6
bitternesses	-0.6
blame	-0.6
blamed	-0.6
blames	-0.6
blaming	-0.6
bland	-0.35
blandly	-0.35
bleak	-0.6
bleakly	-0.6
bless	0.6
blessed	0.65
blesses	0.6
blessing	0.65
blessings	0.65
bliss	0.85
blisses	0.85
blissful	0.85
blissfully	0.85
blunder	-0.5
blunders	-0.5
boast	-0.35
boasted	-0.35
boasting	-0.35
boasts	-0.35
bold	0.4
boldly	0.4
bonus	0.5
bonuses	0.5
bored	-0.4
boredom	-0.45
boring	-0.45
bother	-0.45
bothered	-0.45
bothering	-0.45
bothers	-0.45
bothersome	-0.5
bothersomely	-0.5
brag	-0.35
brave	0.6
bravely	0.6
braveries	0.6
bravery	0.6
break	-0.4
breaking	-0.4
breaks	-0.4
breakup	-0.6
breakups	-0.6
breathtaking	0.75
breathtakingly	0.75
bright	0.5
brighten	0.55
brightened	0.55
brightening	0.55
brightens	0.55
brightly	0.5
brilliance	0.7
brilliant	0.8
brilliantly	0.8
brisk	0.25
briskly	0.25
broke	-0.45
broken	-0.6
bruise	-0.5
bruises	-0.5
brutal	-0.8
brutally	-0.8
bullied	-0.7
bullies	-0.7
bully	-0.7
bullying	-0.7
bumpily	-0.35
bumpy	-0.35
buoyant	0.5
buoyantly	0.5
burden	-0.6
burdened	-0.6
burdens	-0.6
burdensome	-0.6
burdensomely	-0.6
burnout	-0.7
burnouts	-0.7
calamities	-0.7
calamity	-0.7
calm	0.5
calming	0.55
calmly	0.5
candid	0.4
candidly	0.4
capable	0.45
capably	0.45
care	0.45
cared	0.45
careless	-0.5
carelessly	-0.5
cares	0.45
caring	0.65
catastrophe	-0.8
catastrophes	-0.8
catastrophic	-0.8
catastrophically	-0.8
caution	-0.25
cautions	-0.25
cautious	-0.15
cautiously	-0.15
celebrate	0.65
celebrated	0.65
celebrates	0.65
celebrating	0.65
celebration	0.65
celebrations	0.65
censure	-0.55
censured	-0.55
censures	-0.55
censuring	-0.55
champion	0.6
champions	0.6
chaos	-0.55
chaotic	-0.55
chaotically	-0.55
charm	0.5
charmed	0.5
charming	0.6
charms	0.5
cheat	-0.65
cheated	-0.65
cheating	-0.65
cheats	-0.65
cheer	0.6
cheered	0.6
cheerful	0.7
cheerfully	0.7
cheerily	0.65
cheering	0.6
cheerless	-0.55
cheerlessly	-0.55
cheers	0.6
cheery	0.65
cherish	0.65
cherished	0.65
cherishes	0.65
cherishing	0.65
chill	0.1
chronic	-0.5
chronically	-0.5
clean	0.4
cleanly	0.4
clever	0.55
cleverly	0.55
clumsily	-0.45
clumsy	-0.45
coarse	-0.35
coarsely	-0.35
coherent	0.35
coherently	0.35
cold	-0.35
collaborate	0.45
collaborated	0.45
collaborates	0.45
collaborating	0.45
collaboration	0.45
collaborations	0.45
collapse	-0.6
collapsed	-0.6
collapses	-0.6
collapsing	-0.6
comfort	0.55
comfortable	0.55
comfortably	0.55
comforted	0.55
comforting	0.55
comforts	0.55
commend	0.55
commendable	0.6
commendably	0.6
commended	0.55
commending	0.55
commends	0.55
commit	0.4
commitment	0.45
commitments	0.45
commits	0.4
committed	0.45
committing	0.4
compassion	0.7
compassionate	0.7
compassionately	0.7
compassions	0.7
compatible	0.4
compatibly	0.4
competent	0.45
competently	0.45
complain	-0.45
complained	-0.45
complaining	-0.45
complains	-0.45
complaint	-0.45
complaints	-0.45
complicate	-0.4
complicated	-0.4
complicates	-0.4
complicating	-0.4
compliment	0.55
complimented	0.55
complimenting	0.55
compliments	0.55
comprehensive	0.3
comprehensively	0.3
compromise	0.2
compromised	0.2
compromises	0.2
compromising	0.2
compulsive	-0.5
compulsively	-0.5
conceited	-0.55
conceitedly	-0.55
concern	-0.35
concerned	-0.35
concerning	-0.35
concerns	-0.35
condemn	-0.6
condemned	-0.6
condemning	-0.6
condemns	-0.6
confidence	0.6
confident	0.6
confidently	0.6
conflict	-0.55
conflicts	-0.55
confused	-0.45
confusing	-0.45
confusion	-0.45
confusions	-0.45
congenial	0.55
congenially	0.55
congratulate	0.65
congratulated	0.65
congratulates	0.65
congratulating	0.65
congratulations	0.7
connect	0.4
connected	0.4
connecting	0.4
connection	0.45
connections	0.45
connects	0.4
conquer	0.45
conquered	0.45
conquering	0.45
conquers	0.45
conscientious	0.5
conscientiously	0.5
considerate	0.55
considerately	0.55
consistent	0.35
consistently	0.35
console	0.5
consoled	0.5
consoles	0.5
consoling	0.5
constructive	0.5
constructively	0.5
contaminate	-0.55
contaminated	-0.55
contaminates	-0.55
contaminating	-0.55
contempt	-0.65
contempts	-0.65
content	0.5
contentment	0.6
contentments	0.6
control	-0.3
controlling	-0.55
convenient	0.4
conveniently	0.4
cooperate	0.45
cooperated	0.45
cooperates	0.45
cooperating	0.45
cooperative	0.5
cooperatively	0.5
cope	0.2
coped	0.2
copes	0.2
coping	0.2
cordial	0.5
cordially	0.5
corrupt	-0.65
corruption	-0.65
corruptions	-0.65
corruptly	-0.65
costly	-0.4
courage	0.6
courageous	0.65
courageously	0.65
courages	0.6
courteous	0.55
courteously	0.55
cozily	0.55
cozy	0.55
cramped	-0.4
crash	-0.55
crave	-0.3
craved	-0.3
craves	-0.3
craving	-0.5
creative	0.5
creatively	0.5
creativities	0.5
creativity	0.5
crestfallen	-0.6
crestfallenly	-0.6
cried	-0.6
cries	-0.6
crisis	-0.7
critical	-0.45
critically	-0.45
criticism	-0.5
criticize	-0.55
criticized	-0.55
criticizes	-0.55
criticizing	-0.55
crooked	-0.5
crookedly	-0.5
crude	-0.45
crudely	-0.45
cruel	-0.8
cruelly	-0.8
cruelties	-0.8
cruelty	-0.8
crush	-0.5
crushed	-0.5
crushes	-0.5
crushing	-0.5
cry	-0.6
crying	-0.6
curiosities	0.4
curiosity	0.4
curious	0.4
curiously	0.4
curse	-0.55
cursed	-0.55
curses	-0.55
cursing	-0.55
cute	0.55
cutely	0.55
cutting	-0.45
cynical	-0.5
cynically	-0.5
damage	-0.6
damaged	-0.6
damages	-0.6
damaging	-0.6
danger	-0.6
dangerous	-0.65
dangerously	-0.65
dangers	-0.6
dark	-0.45
darkly	-0.45
dazzle	0.6
dazzled	0.6
dazzles	0.6
dazzling	0.6
dead	-0.75
death	-0.75
debt	-0.5
debts	-0.5
decay	-0.5
decayed	-0.5
decaying	-0.5
decays	-0.5
deceitful	-0.65
deceitfully	-0.65
deceive	-0.65
deceived	-0.65
deceives	-0.65
deceiving	-0.65
decent	0.4
decently	0.4
deception	-0.65
deceptions	-0.65
decline	-0.4
declined	-0.4
declines	-0.4
declining	-0.4
dedicate	0.45
dedicated	0.55
dedicates	0.45
dedicating	0.45
dedication	0.55
dedications	0.55
defeat	-0.6
defeated	-0.6
defeating	-0.6
defeats	-0.6
deficient	-0.5
deficiently	-0.5
degrade	-0.6
degraded	-0.6
degrades	-0.6
degrading	-0.6
dejected	-0.65
delay	-0.35
delayed	-0.35
delaying	-0.35
delays	-0.35
delicious	0.6
deliciously	0.6
delight	0.75
delighted	0.75
delightful	0.8
delightfully	0.8
delighting	0.75
delights	0.75
delusion	-0.55
delusions	-0.55
demean	-0.6
demeaned	-0.6
demeaning	-0.6
demeans	-0.6
demolish	-0.55
demolished	-0.55
demolishes	-0.55
demolishing	-0.55
denial	-0.45
denials	-0.45
denied	-0.4
denies	-0.4
denounce	-0.55
denounced	-0.55
denounces	-0.55
denouncing	-0.55
deny	-0.4
denying	-0.4
dependable	0.55
dependably	0.55
deplete	-0.45
depleted	-0.45
depletes	-0.45
depleting	-0.45
deplorable	-0.7
deplorably	-0.7
depress	-0.7
depressed	-0.75
depresses	-0.7
depressing	-0.7
depression	-0.75
depressions	-0.75
deprive	-0.55
deprived	-0.55
deprives	-0.55
depriving	-0.55
deserve	0.3
deserved	0.3
deserves	0.3
deserving	0.3
desirable	0.5
desirably	0.5
desire	0.3
desired	0.3
desires	0.3
desiring	0.3
desolate	-0.65
desolately	-0.65
despair	-0.85
despairs	-0.85
desperate	-0.65
desperately	-0.65
desperation	-0.65
desperations	-0.65
despise	-0.8
despised	-0.8
despises	-0.8
despising	-0.8
destroy	-0.7
destroyed	-0.7
destroying	-0.7
destroys	-0.7
destruction	-0.7
destructions	-0.7
destructive	-0.65
destructively	-0.65
deteriorate	-0.55
deteriorated	-0.55
deteriorates	-0.55
deteriorating	-0.55
determination	0.5
determinations	0.5
determine	0.2
determined	0.5
determines	0.2
determining	0.2
detest	-0.7
detested	-0.7
detesting	-0.7
detests	-0.7
devastate	-0.85
devastated	-0.85
devastates	-0.85
devastating	-0.85
devastation	-0.85
devastations	-0.85
devoted	0.6
devotion	0.6
devotions	0.6
die	-0.75
died	-0.75
dies	-0.75
difficult	-0.5
difficulties	-0.5
difficultly	-0.5
difficulty	-0.5
dignified	0.5
dignities	0.5
dignity	0.5
diligent	0.5
diligently	0.5
dim	-0.3
diminish	-0.4
diminished	-0.4
diminishes	-0.4
diminishing	-0.4
dimly	-0.3
dire	-0.6
direly	-0.6
dirtily	-0.45
dirty	-0.45
disable	-0.45
disabled	-0.45
disables	-0.45
disabling	-0.45
disadvantage	-0.45
disadvantages	-0.45
disagree	-0.4
disagreed	-0.4
disagreeing	-0.4
disagreement	-0.45
disagreements	-0.45
disagrees	-0.4
disappoint	-0.6
disappointed	-0.6
disappointing	-0.6
disappointment	-0.6
disappointments	-0.6
disappoints	-0.6
disapprove	-0.5
disapproved	-0.5
disapproves	-0.5
disapproving	-0.5
disaster	-0.75
disasters	-0.75
disastrous	-0.8
disastrously	-0.8
discomfort	-0.5
discomforts	-0.5
disconnect	-0.4
disconnected	-0.4
disconnecting	-0.4
disconnects	-0.4
discourage	-0.55
discouraged	-0.6
discourages	-0.55
discouraging	-0.6
discredit	-0.5
discredited	-0.5
discrediting	-0.5
discredits	-0.5
disease	-0.6
diseases	-0.6
disgrace	-0.65
disgraceful	-0.65
disgracefully	-0.65
disgraces	-0.65
disgust	-0.75
disgusted	-0.75
disgusting	-0.8
disgusts	-0.75
dishearten	-0.6
disheartened	-0.6
disheartening	-0.6
disheartens	-0.6
dishonest	-0.6
dishonestly	-0.6
dishonor	-0.6
dishonors	-0.6
dislike	-0.5
disliked	-0.5
dislikes	-0.5
disliking	-0.5
dismal	-0.65
dismally	-0.65
dismay	-0.6
dismays	-0.6
dismiss	-0.4
dismissed	-0.4
dismisses	-0.4
dismissing	-0.4
dismissive	-0.55
dismissively	-0.55
disorder	-0.5
disorders	-0.5
disorganized	-0.45
disorganizedly	-0.45
displease	-0.5
displeased	-0.5
displeases	-0.5
displeasing	-0.5
dispute	-0.5
disputed	-0.5
disputes	-0.5
disputing	-0.5
disregard	-0.5
disregarded	-0.5
disregarding	-0.5
disregards	-0.5
disrespect	-0.6
disrespectful	-0.6
disrespectfully	-0.6
disrespects	-0.6
disrupt	-0.45
disrupted	-0.45
disrupting	-0.45
disruptive	-0.5
disruptively	-0.5
disrupts	-0.45
dissatisfied	-0.55
dissatisfiedly	-0.55
distant	-0.35
distantly	-0.35
distract	-0.35
distracted	-0.35
distracting	-0.35
distraction	-0.35
distractions	-0.35
distracts	-0.35
distress	-0.7
distressed	-0.7
distresses	-0.7
distressing	-0.7
distrust	-0.55
distrusted	-0.55
distrusting	-0.55
distrusts	-0.55
disturb	-0.55
disturbed	-0.6
disturbing	-0.65
disturbs	-0.55
divide	-0.3
divided	-0.3
divides	-0.3
dividing	-0.3
divisive	-0.5
divisively	-0.5
divorce	-0.6
dizzily	-0.4
dizzy	-0.4
doom	-0.7
doomed	-0.75
dooms	-0.7
doubt	-0.45
doubted	-0.45
doubtful	-0.5
doubtfully	-0.5
doubting	-0.45
doubts	-0.45
downcast	-0.6
downcastly	-0.6
downhearted	-0.6
downheartedly	-0.6
drain	-0.45
drained	-0.6
draining	-0.45
drains	-0.45
dread	-0.7
dreaded	-0.7
dreadful	-0.8
dreadfully	-0.8
dreading	-0.7
dreads	-0.7
dream	0.35
dreamily	0.4
dreamy	0.4
drearily	-0.5
dreary	-0.5
drown	-0.6
drowned	-0.6
drowning	-0.6
drowns	-0.6
dull	-0.4
dullly	-0.4
dump	-0.45
dumped	-0.45
dumping	-0.45
dumps	-0.45
dying	-0.8
eager	0.55
eagerly	0.55
earnest	0.45
earnestly	0.45
ease	0.45
eased	0.45
eases	0.45
easily	0.4
easing	0.45
easy	0.4
ecstasies	0.85
ecstasy	0.85
ecstatic	0.9
ecstatically	0.9
edgily	-0.4
edgy	-0.4
educate	0.35
educated	0.35
educates	0.35
educating	0.35
effective	0.45
effectively	0.45
efficient	0.45
efficiently	0.45
effortless	0.5
effortlessly	0.5
elated	0.85
elegance	0.55
elegant	0.6
elegantly	0.6
elevate	0.45
elevated	0.45
elevates	0.45
elevating	0.45
eloquent	0.55
eloquently	0.55
embarrassed	-0.6
embarrassing	-0.6
embarrassment	-0.6
embarrassments	-0.6
embrace	0.55
embraced	0.55
embraces	0.55
embracing	0.55
emergencies	-0.6
emergency	-0.6
eminent	0.5
eminently	0.5
emotional	-0.1
emotionally	-0.1
empathetic	0.6
empathetically	0.6
empathies	0.6
empathy	0.6
empower	0.6
empowered	0.6
empowering	0.6
empowers	0.6
emptily	-0.5
emptiness	-0.6
emptinesses	-0.6
empty	-0.5
encourage	0.6
encouraged	0.6
encouragement	0.6
encouragements	0.6
encourages	0.6
encouraging	0.6
energetic	0.55
energetically	0.55
energize	0.55
energized	0.55
energizes	0.55
energizing	0.55
engage	0.35
engaged	0.35
engages	0.35
engaging	0.5
enjoy	0.65
enjoyable	0.65
enjoyably	0.65
enjoyed	0.65
enjoying	0.65
enjoyment	0.6
enjoyments	0.6
enjoys	0.65
enrage	-0.75
enraged	-0.8
enrages	-0.75
enraging	-0.75
enrich	0.55
enriched	0.55
enriches	0.55
enriching	0.55
entertain	0.45
entertained	0.45
entertaining	0.45
entertains	0.45
enthusiasm	0.7
enthusiasms	0.7
enthusiast	0.55
enthusiastic	0.7
enthusiastically	0.7
enthusiasts	0.55
enviable	0.35
enviably	0.35
envied	-0.55
envies	-0.55
envious	-0.55
enviously	-0.55
envy	-0.55
envying	-0.55
err	-0.35
erred	-0.35
erring	-0.35
error	-0.4
errors	-0.4
errs	-0.35
escape	-0.35
escaped	-0.35
escapes	-0.35
escaping	-0.35
essential	0.3
essentially	0.3
esteem	0.5
esteemed	0.55
esteems	0.5
euphoric	0.9
euphorically	0.9
everlasting	0.4
everlastingly	0.4
evil	-0.8
evilly	-0.8
exasperate	-0.6
exasperated	-0.6
exasperates	-0.6
exasperating	-0.6
excel	0.6
excellence	0.7
excellent	0.9
excellently	0.9
exceptional	0.8
exceptionally	0.8
excited	0.7
excitement	0.7
excitements	0.7
exciting	0.7
exclude	-0.5
excluded	-0.6
excludes	-0.5
excluding	-0.5
exclusion	-0.55
exclusions	-0.55
excruciating	-0.85
excruciatingly	-0.85
excuse	-0.2
excused	-0.2
excuses	-0.2
excusing	-0.2
exemplarily	0.65
exemplary	0.65
exhaust	-0.55
exhausted	-0.65
exhausting	-0.6
exhaustion	-0.65
exhaustions	-0.65
exhausts	-0.55
exhilarating	0.8
expert	0.45
expertise	0.45
expertises	0.45
experts	0.45
exploit	-0.55
exploitation	-0.6
exploitations	-0.6
exploited	-0.55
exploiting	-0.55
exploits	-0.55
expose	-0.3
exposed	-0.3
exposes	-0.3
exposing	-0.3
exquisite	0.7
exquisitely	0.7
extraordinarily	0.7
extraordinary	0.7
fabulous	0.75
fabulously	0.75
fail	-0.6
failed	-0.6
failing	-0.6
fails	-0.6
failure	-0.65
failures	-0.65
fair	0.4
fairness	0.45
fairnesses	0.45
faithful	0.6
faithfully	0.6
fake	-0.5
fakely	-0.5
falter	-0.45
faltered	-0.45
faltering	-0.45
falters	-0.45
famous	0.4
famously	0.4
fantastic	0.85
fantastically	0.85
fascinate	0.55
fascinated	0.55
fascinates	0.55
fascinating	0.55
fascination	0.5
fascinations	0.5
fatal	-0.75
fatally	-0.75
fatigue	-0.55
fatigues	-0.55
fault	-0.45
faults	-0.45
favor	0.4
favorable	0.55
favorably	0.55
favored	0.4
favoring	0.4
favorite	0.55
favors	0.4
fear	-0.65
feared	-0.65
fearful	-0.65
fearfully	-0.65
fearing	-0.65
fearless	0.5
fearlessly	0.5
fears	-0.65
feeble	-0.45
feebly	-0.45
felt	0.0
festive	0.6
festively	0.6
fierce	-0.3
fiercely	-0.3
fight	-0.55
fighting	-0.6
fights	-0.55
filth	-0.6
filthily	-0.6
filthy	-0.6
fine	0.35
fired	-0.6
flatter	0.3
flattered	0.3
flattering	0.3
flatters	0.3
flaw	-0.45
flawed	-0.5
flawless	0.85
flawlessly	0.85
flaws	-0.45
fled	-0.45
flee	-0.45
fleeing	-0.45
flees	-0.45
flimsily	-0.4
flimsy	-0.4
flop	-0.45
flops	-0.45
flourish	0.65
flourished	0.65
flourishes	0.65
flourishing	0.65
fond	0.55
fondly	0.55
fool	-0.45
foolish	-0.5
foolishly	-0.5
fools	-0.45
forbid	-0.4
forceful	-0.3
forcefully	-0.3
forgave	0.55
forgive	0.55
forgiven	0.55
forgiveness	0.6
forgivenesses	0.6
forgives	0.55
forgiving	0.6
forsake	-0.6
forsaked	-0.6
forsakes	-0.6
forsaking	-0.6
fortunate	0.6
fortunately	0.6
fortune	0.5
fortunes	0.5
fought	-0.55
foul	-0.6
foully	-0.6
fragile	-0.45
fragilely	-0.45
fragrant	0.45
fragrantly	0.45
frantic	-0.55
frantically	-0.55
fraud	-0.65
frauds	-0.65
free	0.45
freedom	0.55
freely	0.4
fresh	0.45
freshly	0.45
friend	0.5
friendliness	0.6
friendlinesses	0.6
friendly	0.6
friends	0.5
friendship	0.6
friendships	0.6
fright	-0.6
frighten	-0.65
frightened	-0.65
frightening	-0.65
frightens	-0.65
frights	-0.6
frown	-0.45
frowned	-0.45
frowning	-0.45
frowns	-0.45
frustrated	-0.65
frustrating	-0.65
frustration	-0.65
frustrations	-0.65
fulfill	0.55
fulfilled	0.65
fulfilling	0.65
fulfillment	0.65
fulfillments	0.65
fulfills	0.55
fun	0.65
funnily	0.55
funny	0.55
furies	-0.8
furious	-0.8
furiously	-0.8
fury	-0.8
gain	0.4
gained	0.4
gaining	0.4
gains	0.4
generosities	0.65
generosity	0.65
generous	0.65
generously	0.65
genius	0.6
geniuses	0.6
gentle	0.55
gently	0.55
genuine	0.55
genuinely	0.55
gift	0.5
gifted	0.6
gifts	0.5
glad	0.6
gladly	0.6
glee	0.7
glees	0.7
gloom	-0.6
gloomily	-0.6
glooms	-0.6
gloomy	-0.6
glories	0.6
glorious	0.7
gloriously	0.7
glory	0.6
glow	0.45
glowed	0.45
glowing	0.45
glows	0.45
good	0.6
goodness	0.6
goodnesses	0.6
goodwill	0.6
goodwills	0.6
gorgeous	0.7
gorgeously	0.7
grace	0.5
graceful	0.6
gracefully	0.6
graces	0.5
gracious	0.6
graciously	0.6
grand	0.55
grandly	0.55
grateful	0.7
gratefully	0.7
gratified	0.55
gratifies	0.55
gratify	0.55
gratifying	0.55
gratitude	0.7
gratitudes	0.7
grave	-0.5
gravely	-0.5
great	0.7
greatly	0.7
greed	-0.55
greedily	-0.55
greeds	-0.55
greedy	-0.55
grew	0.4
grief	-0.75
griefs	-0.75
grievance	-0.5
grieve	-0.7
grieved	-0.7
grieves	-0.7
grieving	-0.7
grim	-0.6
grimly	-0.6
grin	0.5
grotesque	-0.7
grotesquely	-0.7
grow	0.4
growing	0.4
grown	0.35
grows	0.4
growth	0.45
gruesome	-0.7
gruesomely	-0.7
grumble	-0.45
grumbled	-0.45
grumbles	-0.45
grumbling	-0.45
grumpily	-0.5
grumpy	-0.5
guilt	-0.65
guiltily	-0.65
guilts	-0.65
guilty	-0.65
hallucination	-0.55
hallucinations	-0.55
handily	0.35
handy	0.35
happily	0.7
happiness	0.7
happinesses	0.7
happy	0.7
harass	-0.7
harassed	-0.7
harasses	-0.7
harassing	-0.7
harassment	-0.7
harassments	-0.7
hard	-0.35
harm	-0.65
harmed	-0.65
harmful	-0.65
harmfully	-0.65
harming	-0.65
harmless	0.3
harmlessly	0.3
harmonies	0.6
harmonious	0.6
harmoniously	0.6
harmonize	0.5
harmonized	0.5
harmonizes	0.5
harmonizing	0.5
harmony	0.6
harms	-0.65
harsh	-0.55
harshly	-0.55
hassle	-0.45
hassles	-0.45
hate	-0.8
hated	-0.8
hateful	-0.75
hatefully	-0.75
hates	-0.8
hating	-0.8
hatred	-0.85
hatreds	-0.85
haunt	-0.55
haunted	-0.55
haunting	-0.55
haunts	-0.55
heal	0.55
healed	0.55
healing	0.55
heals	0.55
health	0.45
healthily	0.6
healthy	0.6
heartbreak	-0.75
heartbreaks	-0.75
heartbroken	-0.8
heartfelt	0.6
heartfeltly	0.6
heartwarming	0.7
heartwarmingly	0.7
heavenly	0.7
hectic	-0.4
hectically	-0.4
help	0.45
helped	0.45
helpful	0.6
helpfully	0.6
helping	0.45
helpless	-0.65
helplessly	-0.65
helplessness	-0.65
helplessnesses	-0.65
helps	0.45
hid	-0.35
hide	-0.35
hideous	-0.75
hideously	-0.75
hides	-0.35
hiding	-0.35
hinder	-0.45
hindered	-0.45
hindering	-0.45
hinders	-0.45
homeless	-0.65
homelessly	-0.65
homesick	-0.5
homesickly	-0.5
honest	0.6
honesties	0.6
honestly	0.6
honesty	0.6
honor	0.55
honorable	0.6
honored	0.55
honoring	0.55
honors	0.55
hope	0.55
hoped	0.55
hopeful	0.65
hopefully	0.65
hopeless	-0.8
hopelessly	-0.8
hopelessness	-0.8
hopelessnesses	-0.8
hopes	0.55
hoping	0.55
horrendous	-0.8
horrendously	-0.8
horrible	-0.85
horribly	-0.85
horrific	-0.85
horrifically	-0.85
horrified	-0.8
horrifies	-0.8
horrify	-0.8
horrifying	-0.8
horror	-0.8
horrors	-0.8
hostile	-0.7
hostilely	-0.7
hostilities	-0.7
hostility	-0.7
hug	0.55
hugged	0.55
hugging	0.55
hugs	0.55
humble	0.45
humbly	0.45
humiliate	-0.75
humiliated	-0.75
humiliates	-0.75
humiliating	-0.75
humiliation	-0.75
humiliations	-0.75
humor	0.5
humorous	0.55
humorously	0.55
humors	0.5
hunger	-0.45
hungers	-0.45
hungrily	-0.45
hungry	-0.45
hurt	-0.65
hurtful	-0.7
hurtfully	-0.7
hurtle	-0.2
hurtled	-0.2
hurtles	-0.2
hurtling	-0.2
hygienic	0.3
hygienically	0.3
ideal	0.6
ideally	0.6
idiot	-0.65
idiots	-0.65
idolize	0.5
idolized	0.5
idolizes	0.5
idolizing	0.5
ignore	-0.5
ignored	-0.5
ignores	-0.5
ignoring	-0.5
ill	-0.6
illness	-0.6
illnesses	-0.6
imaginative	0.5
imaginatively	0.5
immaculate	0.6
immaculately	0.6
impatient	-0.45
impatiently	-0.45
impeccable	0.65
impeccably	0.65
impolite	-0.5
impolitely	-0.5
impress	0.55
impressed	0.55
impresses	0.55
impressing	0.55
impressive	0.6
impressively	0.6
improper	-0.45
improperly	-0.45
improve	0.5
improved	0.5
improvement	0.5
improvements	0.5
improves	0.5
improving	0.5
inabilities	-0.45
inability	-0.45
inadequate	-0.55
inadequately	-0.55
incompetent	-0.6
incompetently	-0.6
inconsiderate	-0.55
inconsiderately	-0.55
inconvenient	-0.4
inconveniently	-0.4
incredible	0.75
incredibly	0.75
indifferent	-0.35
indifferently	-0.35
indulge	0.2
indulged	0.2
indulges	0.2
indulging	0.2
ineffective	-0.45
ineffectively	-0.45
inept	-0.55
ineptly	-0.55
infect	-0.5
infected	-0.5
infecting	-0.5
infection	-0.55
infections	-0.55
infects	-0.5
inferior	-0.55
inferiorly	-0.55
inflame	-0.45
inflamed	-0.45
inflames	-0.45
inflaming	-0.45
infuriate	-0.75
infuriated	-0.75
infuriates	-0.75
infuriating	-0.75
ingenious	0.6
ingeniously	0.6
inhumane	-0.7
inhumanely	-0.7
injure	-0.6
injured	-0.6
injures	-0.6
injuries	-0.6
injuring	-0.6
injury	-0.6
injustice	-0.65
injustices	-0.65
innocent	0.4
innocently	0.4
innovative	0.5
innovatively	0.5
insane	-0.55
insanely	-0.55
insecure	-0.55
insecurely	-0.55
insecurities	-0.55
insecurity	-0.55
insight	0.45
insightful	0.6
insightfully	0.6
insights	0.45
insignificant	-0.45
insignificantly	-0.45
inspiration	0.65
inspirations	0.65
inspire	0.65
inspired	0.65
inspires	0.65
inspiring	0.65
instructive	0.4
instructively	0.4
insult	-0.65
insulted	-0.65
insulting	-0.65
insults	-0.65
intelligence	0.5
intelligent	0.55
intelligently	0.55
interest	0.35
interested	0.35
interesting	0.45
interests	0.35
intimidate	-0.6
intimidated	-0.6
intimidates	-0.6
intimidating	-0.6
intolerable	-0.65
intolerably	-0.65
intolerant	-0.55
intolerantly	-0.55
invalidate	-0.5
invalidated	-0.5
invalidates	-0.5
invalidating	-0.5
irrational	-0.5
irrationally	-0.5
irresponsible	-0.55
irresponsibly	-0.55
irritable	-0.5
irritably	-0.5
irritate	-0.55
irritated	-0.55
irritates	-0.55
irritating	-0.55
isolated	-0.6
isolating	-0.6
isolation	-0.6
isolations	-0.6
jade	-0.3
jaded	-0.3
jades	-0.3
jading	-0.3
jealous	-0.6
jealousies	-0.6
jealously	-0.6
jealousy	-0.6
jeopardize	-0.55
jeopardized	-0.55
jeopardizes	-0.55
jeopardizing	-0.55
jollily	0.6
jolly	0.6
jovial	0.6
jovially	0.6
joy	0.8
joyful	0.8
joyfully	0.8
joyous	0.8
joyously	0.8
joys	0.8
jubilant	0.85
jubilantly	0.85
judge	-0.35
judgmental	-0.6
judgmentally	-0.6
keen	0.45
keenly	0.45
kill	-0.8
kind	0.65
kindness	0.7
kindnesses	0.7
lament	-0.55
lamented	-0.55
lamenting	-0.55
laments	-0.55
lash	-0.5
lashed	-0.5
lashes	-0.5
lashing	-0.5
laugh	0.65
laughed	0.65
laughing	0.65
laughs	0.65
laughter	0.65
laughters	0.65
lazily	-0.45
lazy	-0.45
legitimate	0.35
legitimately	0.35
lethal	-0.7
lethally	-0.7
liar	-0.65
liars	-0.65
liberate	0.55
liberated	0.55
liberates	0.55
liberating	0.55
lie	-0.55
lied	-0.6
lies	-0.5
lift	0.3
lifted	0.3
lifting	0.3
lifts	0.3
likable	0.5
likably	0.5
like	0.4
limitation	-0.35
limitations	-0.35
livable	0.3
livably	0.3
lively	0.55
loathe	-0.8
loathed	-0.8
loathes	-0.8
loathing	-0.8
lonelily	-0.65
loneliness	-0.65
lonelinesses	-0.65
lonely	-0.65
lonesome	-0.6
lonesomely	-0.6
longing	-0.3
lose	-0.55
loser	-0.65
losers	-0.65
loses	-0.55
losing	-0.55
loss	-0.6
losses	-0.6
lost	-0.55
lousily	-0.55
lousy	-0.55
love	0.8
loved	0.8
lovely	0.65
loves	0.8
loving	0.8
loyal	0.6
loyally	0.6
loyalties	0.6
loyalty	0.6
luck	0.45
luckily	0.55
lucks	0.45
lucky	0.55
lure	-0.35
lured	-0.35
lures	-0.35
luring	-0.35
luxuries	0.5
luxurious	0.55
luxuriously	0.55
luxury	0.5
lying	-0.6
mad	-0.6
madly	-0.6
magical	0.6
magically	0.6
magnificent	0.85
magnificently	0.85
majestic	0.65
majestically	0.65
malice	-0.65
malices	-0.65
malicious	-0.7
maliciously	-0.7
manipulate	-0.65
manipulated	-0.65
manipulates	-0.65
manipulating	-0.65
manipulation	-0.65
manipulations	-0.65
manipulative	-0.7
manipulatively	-0.7
marvelous	0.85
marvelously	0.85
masterful	0.6
masterfully	0.6
masterpiece	0.7
masterpieces	0.7
meaningful	0.55
meaningfully	0.55
meaningless	-0.6
meaninglessly	-0.6
mediocre	-0.4
mediocrely	-0.4
melancholy	-0.65
menacing	-0.65
mend	0.4
mended	0.4
mending	0.4
mends	0.4
mercies	0.5
merciful	0.55
mercifully	0.55
mercy	0.5
merit	0.4
merits	0.4
mess	-0.4
messes	-0.4
messily	-0.45
messy	-0.45
mightily	0.45
mighty	0.45
mild	0.15
mildly	0.15
mindful	0.5
mindfully	0.5
mischief	-0.35
mischiefs	-0.35
miserable	-0.8
miserably	-0.8
miseries	-0.8
misery	-0.8
misfortune	-0.6
misfortunes	-0.6
misguided	-0.45
misguidedly	-0.45
mislead	-0.55
misleading	-0.55
mistake	-0.45
mistakes	-0.45
mistrust	-0.55
mistrusts	-0.55
misunderstand	-0.4
misunderstanding	-0.45
misunderstandings	-0.45
moan	-0.45
moaned	-0.45
moaning	-0.45
moans	-0.45
mock	-0.6
mocked	-0.6
mocking	-0.6
mocks	-0.6
modest	0.45
modestly	0.45
monstrous	-0.75
monstrously	-0.75
morbid	-0.55
morbidly	-0.55
motivate	0.55
motivated	0.55
motivates	0.55
motivating	0.55
motivation	0.55
motivations	0.55
mourn	-0.7
mourned	-0.7
mourning	-0.7
mourns	-0.7
mundane	-0.3
mundanely	-0.3
murder	-0.85
murdered	-0.85
murdering	-0.85
murders	-0.85
nastily	-0.7
nasty	-0.7
needily	-0.4
needy	-0.4
negative	-0.5
negatively	-0.5
negativities	-0.55
negativity	-0.55
neglect	-0.65
neglected	-0.65
neglecting	-0.65
neglects	-0.65
nervous	-0.55
nervously	-0.55
new	0.25
nice	0.5
nicely	0.5
nightmare	-0.75
nightmares	-0.75
nightmarish	-0.75
nightmarishly	-0.75
noble	0.55
nobly	0.55
noise	-0.35
noises	-0.35
noisily	-0.4
noisy	-0.4
notable	0.4
notably	0.4
nuisance	-0.5
numb	-0.55
numbly	-0.55
nurture	0.55
nurtured	0.55
nurtures	0.55
nurturing	0.55
obsess	-0.5
obsessed	-0.5
obsesses	-0.5
obsessing	-0.5
obsession	-0.55
obsessions	-0.55
obsessive	-0.55
obsessively	-0.55
obstacle	-0.4
obstacles	-0.4
obstruct	-0.45
obstructed	-0.45
obstructing	-0.45
obstructs	-0.45
offend	-0.6
offended	-0.6
offending	-0.6
offends	-0.6
offense	-0.55
offenses	-0.55
offensive	-0.65
offensively	-0.65
okay	0.25
open	0.3
openness	0.4
opennesses	0.4
opportune	0.4
opportunely	0.4
opportunities	0.45
opportunity	0.45
oppress	-0.65
oppressed	-0.65
oppresses	-0.65
oppressing	-0.65
oppression	-0.65
oppressions	-0.65
oppressive	-0.65
oppressively	-0.65
optimism	0.65
optimistic	0.65
optimistically	0.65
ordeal	-0.55
ordeals	-0.55
outburst	-0.45
outbursts	-0.45
outcast	-0.55
outcasts	-0.55
outrage	-0.7
outraged	-0.75
outrages	-0.7
outstanding	0.85
outstandingly	0.8
overbearing	-0.55
overbearingly	-0.55
overcome	0.5
overjoyed	0.9
overreact	-0.4
overreacted	-0.4
overreacting	-0.4
overreacts	-0.4
overwhelmed	-0.65
overwhelming	-0.6
overwork	-0.45
overworked	-0.45
overworking	-0.45
overworks	-0.45
pain	-0.65
painful	-0.7
painfully	-0.7
pains	-0.65
pamper	0.4
pampered	0.4
pampering	0.4
pampers	0.4
panic	-0.7
panicked	-0.7
panicking	-0.7
panics	-0.7
paradise	0.75
paradises	0.75
paralyze	-0.6
paralyzed	-0.6
paralyzes	-0.6
paralyzing	-0.6
paranoia	-0.6
paranoias	-0.6
paranoid	-0.6
paranoidly	-0.6
passionately	0.6
pathetic	-0.6
pathetically	-0.6
patience	0.5
patient	0.5
peace	0.6
peaceful	0.65
peacefully	0.65
perfect	0.85
perfectly	0.85
peril	-0.6
perilous	-0.6
perilously	-0.6
perils	-0.6
perish	-0.65
perished	-0.65
perishes	-0.65
perishing	-0.65
persecute	-0.65
persecuted	-0.65
persecutes	-0.65
persecuting	-0.65
perseverance	0.55
persevere	0.5
persevered	0.5
perseveres	0.5
persevering	0.5
pessimism	-0.6
pessimist	-0.5
pessimistic	-0.6
pessimistically	-0.6
pessimists	-0.5
pest	-0.45
pests	-0.45
phenomenal	0.85
phenomenally	0.85
pities	-0.4
pitiful	-0.55
pitifully	-0.55
pity	-0.4
plague	-0.6
plagued	-0.6
plagues	-0.6
plaguing	-0.6
playful	0.55
playfully	0.55
pleasant	0.65
pleasantly	0.65
pleased	0.6
pleasing	0.6
pleasure	0.65
pleasures	0.65
plight	-0.5
plights	-0.5
pointless	-0.6
pointlessly	-0.6
poison	-0.65
poisoned	-0.65
poisoning	-0.65
poisonous	-0.65
poisonously	-0.65
poisons	-0.65
polite	0.5
politely	0.5
poor	-0.5
poorly	-0.5
popular	0.45
popularly	0.45
positive	0.55
positively	0.55
positivities	0.6
positivity	0.6
poverties	-0.6
poverty	-0.6
powerful	0.45
powerfully	0.45
powerless	-0.6
powerlessly	-0.6
praise	0.6
praised	0.6
praises	0.6
praising	0.6
precious	0.6
preciously	0.6
pressure	-0.45
pressured	-0.5
pressures	-0.45
prestige	0.45
prestiges	0.45
prestigious	0.5
prestigiously	0.5
pretty	0.5
pride	0.5
prides	0.5
privilege	0.4
privileges	0.4
prize	0.5
prizes	0.5
problem	-0.45
problematic	-0.5
problematically	-0.5
problems	-0.45
productive	0.5
productively	0.5
proficient	0.5
proficiently	0.5
progress	0.5
progresses	0.5
promising	0.55
promote	0.4
promoted	0.4
promotes	0.4
promoting	0.4
prompt	0.25
promptly	0.25
prosper	0.6
prospered	0.6
prospering	0.6
prosperities	0.6
prosperity	0.6
prospers	0.6
protect	0.45
protected	0.45
protecting	0.45
protective	0.45
protectively	0.45
protects	0.45
proud	0.6
proudly	0.6
prudent	0.4
prudently	0.4
punish	-0.55
punished	-0.55
punishes	-0.55
punishing	-0.55
punishment	-0.55
punishments	-0.55
pure	0.45
purely	0.45
purpose	0.4
purposes	0.4
quarrel	-0.55
quarreled	-0.55
quarreling	-0.55
quarrels	-0.55
quit	-0.35
radiant	0.75
radiantly	0.75
radiate	0.45
radiated	0.45
radiates	0.45
radiating	0.45
rage	-0.8
rages	-0.8
rash	-0.4
rashly	-0.4
ravage	-0.6
ravaged	-0.6
ravages	-0.6
ravaging	-0.6
reassurance	0.55
reassure	0.55
reassured	0.55
reassures	0.55
reassuring	0.55
reckless	-0.55
recklessly	-0.55
recommend	0.45
recommended	0.45
recommending	0.45
recommends	0.45
reconcile	0.5
reconciled	0.5
reconciles	0.5
reconciliation	0.55
reconciliations	0.55
reconciling	0.5
recover	0.5
recovered	0.5
recoveries	0.5
recovering	0.5
recovers	0.5
recovery	0.5
refine	0.35
refined	0.35
refines	0.35
refining	0.35
refresh	0.5
refreshed	0.5
refreshes	0.5
refreshing	0.6
regression	-0.4
regressions	-0.4
regret	-0.6
regretful	-0.6
regretfully	-0.6
regrets	-0.6
regretted	-0.6
regretting	-0.6
reject	-0.65
rejected	-0.65
rejecting	-0.65
rejection	-0.65
rejections	-0.65
rejects	-0.65
rejoice	0.7
rejoiced	0.7
rejoices	0.7
rejoicing	0.7
rejuvenate	0.55
rejuvenated	0.55
rejuvenates	0.55
rejuvenating	0.55
relapse	-0.65
relapsed	-0.65
relapses	-0.65
relapsing	-0.65
relax	0.5
relaxed	0.5
relaxes	0.5
relaxing	0.5
reliable	0.55
reliably	0.55
relief	0.55
reliefs	0.55
relieved	0.55
remarkable	0.6
remarkably	0.6
remedies	0.45
remedy	0.45
remorse	-0.65
remorses	-0.65
renew	0.5
renewal	0.5
renewals	0.5
renewed	0.5
renewing	0.5
renews	0.5
reproach	-0.5
reproached	-0.5
reproaches	-0.5
reproaching	-0.5
repulsive	-0.8
repulsively	-0.8
rescue	0.55
rescued	0.55
rescues	0.55
rescuing	0.55
resent	-0.65
resented	-0.65
resentful	-0.65
resentfully	-0.65
resenting	-0.65
resentment	-0.65
resentments	-0.65
resents	-0.65
resilience	0.6
resilient	0.6
resiliently	0.6
resolution	0.4
resolutions	0.4
resolve	0.4
resolved	0.4
resolves	0.4
resolving	0.4
resourceful	0.5
resourcefully	0.5
respect	0.55
respected	0.55
respectful	0.6
respectfully	0.6
respecting	0.55
respects	0.55
restless	-0.5
restlessly	-0.5
restore	0.45
restored	0.45
restores	0.45
restoring	0.45
restrict	-0.35
restricted	-0.35
restricting	-0.35
restriction	-0.4
restrictions	-0.4
restricts	-0.35
revere	0.55
revered	0.55
reveres	0.55
revering	0.55
revive	0.5
revived	0.5
revives	0.5
reviving	0.5
revolting	-0.75
reward	0.55
rewarded	0.55
rewarding	0.55
rewards	0.55
ridicule	-0.65
ridiculed	-0.65
ridicules	-0.65
ridiculing	-0.65
ridiculous	-0.5
ridiculously	-0.5
rigid	-0.35
rigidly	-0.35
rob	-0.6
robust	0.45
robustly	0.45
rot	-0.55
rotten	-0.6
rottenly	-0.6
rude	-0.6
rudely	-0.6
ruin	-0.65
ruined	-0.65
ruining	-0.65
ruins	-0.65
ruthless	-0.65
ruthlessly	-0.65
sabotage	-0.6
sabotaged	-0.6
sabotages	-0.6
sabotaging	-0.6
sacred	0.45
sacredly	0.45
sacrifice	-0.3
sacrificed	-0.3
sacrifices	-0.3
sacrificing	-0.3
sad	-0.65
sadly	-0.65
sadness	-0.65
sadnesses	-0.65
safe	0.5
safely	0.5
safeties	0.5
safety	0.5
sane	0.3
sanely	0.3
satisfaction	0.6
satisfactions	0.6
satisfied	0.6
satisfying	0.6
savage	-0.6
savagely	-0.6
scam	-0.65
scams	-0.65
scare	-0.6
scared	-0.65
scares	-0.6
scarily	-0.6
scaring	-0.6
scary	-0.6
scold	-0.5
scolded	-0.5
scolding	-0.5
scolds	-0.5
scorn	-0.6
scorned	-0.6
scorning	-0.6
scorns	-0.6
scream	-0.55
screamed	-0.55
screaming	-0.55
screams	-0.55
seamless	0.45
seamlessly	0.45
secure	0.5
securely	0.5
securities	0.45
security	0.45
selfish	-0.6
selfishly	-0.6
sensible	0.45
sensibly	0.45
sensitive	0.2
sensitively	0.2
sentimental	0.3
sentimentally	0.3
separation	-0.5
separations	-0.5
serene	0.65
serenely	0.65
serenities	0.65
serenity	0.65
serious	-0.4
seriously	-0.4
severe	-0.55
severely	-0.55
shakily	-0.4
shaky	-0.4
shame	-0.7
shameful	-0.7
shamefully	-0.7
shames	-0.7
shatter	-0.6
shattered	-0.6
shattering	-0.6
shatters	-0.6
shine	0.45
shined	0.45
shines	0.45
shining	0.45
shiver	-0.4
shivered	-0.4
shivering	-0.4
shivers	-0.4
shout	-0.45
shouted	-0.45
shouting	-0.45
shouts	-0.45
shun	-0.55
shuned	-0.55
shuning	-0.55
shuns	-0.55
shut	-0.3
sick	-0.6
sickly	-0.6
sickness	-0.6
sicknesses	-0.6
silence	-0.25
silent	-0.2
silently	-0.2
sincere	0.6
sincerely	0.6
sincerities	0.6
sincerity	0.6
skeptical	-0.35
skeptically	-0.35
skilled	0.5
skillful	0.55
skillfully	0.55
slander	-0.6
slandered	-0.6
slandering	-0.6
slanders	-0.6
sloppily	-0.45
sloppy	-0.45
smart	0.55
smartly	0.55
smash	-0.45
smashed	-0.45
smashes	-0.45
smashing	-0.45
smear	-0.5
smeared	-0.5
smearing	-0.5
smears	-0.5
smile	0.6
smiled	0.6
smiles	0.6
smiling	0.6
smooth	0.4
smoothly	0.4
snap	-0.4
sob	-0.65
sobbed	-0.65
sobbing	-0.65
sobs	-0.65
solid	0.35
solidly	0.35
soothe	0.55
soothed	0.55
soothes	0.55
soothing	0.55
sophisticated	0.4
sophisticatedly	0.4
sorrow	-0.7
sorrowful	-0.7
sorrowfully	-0.7
sorrows	-0.7
spacious	0.4
spaciously	0.4
spectacular	0.85
spectacularly	0.85
spiteful	-0.65
spitefully	-0.65
splendid	0.8
splendidly	0.8
spoil	-0.5
spoiled	-0.5
spoiling	-0.5
spoils	-0.5
stabilities	0.45
stability	0.45
stable	0.45
stably	0.45
stalking	-0.7
starve	-0.6
starved	-0.6
starves	-0.6
starving	-0.6
steady	0.35
steal	-0.6
stealing	-0.6
stellar	0.8
stellarly	0.8
stimulate	0.4
stimulated	0.4
stimulates	0.4
stimulating	0.4
stingily	-0.5
stingy	-0.5
stole	-0.6
stolen	-0.6
strain	-0.45
strained	-0.45
straining	-0.45
strains	-0.45
strangle	-0.65
strangled	-0.65
strangles	-0.65
strangling	-0.65
stray	-0.3
strength	0.5
stress	-0.6
stressed	-0.6
stresses	-0.6
stressful	-0.65
stressfully	-0.65
stressing	-0.6
stride	0.3
strife	-0.55
strifes	-0.55
strong	0.5
struggle	-0.55
struggled	-0.55
struggles	-0.55
struggling	-0.55
stuck	-0.5
stumble	-0.4
stumbled	-0.4
stumbles	-0.4
stumbling	-0.4
stupid	-0.6
stupidly	-0.6
sturdily	0.4
sturdy	0.4
subpar	-0.45
subparly	-0.45
succeed	0.65
succeeded	0.65
succeeding	0.65
succeeds	0.65
success	0.65
successes	0.65
successful	0.65
successfully	0.65
suffer	-0.7
suffered	-0.7
suffering	-0.7
suffers	-0.7
sufficient	0.3
sufficiently	0.3
suffocate	-0.6
suffocated	-0.6
suffocates	-0.6
suffocating	-0.6
suicidal	-0.9
suicidally	-0.9
suicide	-0.9
suicides	-0.9
superb	0.85
superbly	0.85
superior	0.45
superiorly	0.45
support	0.5
supported	0.5
supporting	0.5
supportive	0.6
supportively	0.6
supports	0.5
surrender	-0.35
surrendered	-0.35
surrendering	-0.35
surrenders	-0.35
suspicion	-0.45
suspicions	-0.45
suspicious	-0.45
suspiciously	-0.45
swear	-0.4
swearing	-0.5
sweet	0.55
sweetly	0.55
swindle	-0.6
swindled	-0.6
swindles	-0.6
swindling	-0.6
swore	-0.45
sympathetic	0.55
sympathetically	0.55
sympathies	0.5
sympathize	0.5
sympathized	0.5
sympathizes	0.5
sympathizing	0.5
sympathy	0.5
tactful	0.5
tactfully	0.5
talent	0.5
talented	0.6
talents	0.5
tantrum	-0.5
tantrums	-0.5
tarnish	-0.5
tarnished	-0.5
tarnishes	-0.5
tarnishing	-0.5
tasteful	0.45
tastefully	0.45
tearful	-0.6
tearfully	-0.6
tears	-0.55
tedious	-0.45
tediously	-0.45
tender	0.55
tenderly	0.55
tense	-0.55
tensely	-0.55
tension	-0.55
tensions	-0.55
terrible	-0.8
terribly	-0.8
terrific	0.8
terrifically	0.8
terrified	-0.85
terrifies	-0.85
terrify	-0.85
terrifying	-0.85
terror	-0.85
terrors	-0.85
thank	0.6
thanked	0.6
thankful	0.7
thankfully	0.7
thanking	0.6
thanks	0.6
thoughtful	0.55
thoughtfully	0.55
thoughtless	-0.5
thoughtlessly	-0.5
threat	-0.65
threaten	-0.65
threatened	-0.65
threatening	-0.65
threatens	-0.65
threats	-0.65
thrill	0.7
thrilled	0.85
thrilling	0.7
thrills	0.7
thrive	0.65
thrived	0.65
thrives	0.65
thriving	0.65
tidily	0.4
tidy	0.4
timid	-0.35
timidly	-0.35
tired	-0.5
tolerable	0.2
tolerably	0.2
tolerant	0.45
tolerantly	0.45
tolerate	0.2
tolerated	0.2
tolerates	0.2
tolerating	0.2
torment	-0.8
tormented	-0.8
tormenting	-0.8
torments	-0.8
torture	-0.85
tortured	-0.85
tortures	-0.85
torturing	-0.85
toxic	-0.7
toxically	-0.7
tragedies	-0.8
tragedy	-0.8
tragic	-0.8
tragically	-0.8
tranquil	0.6
tranquilly	0.6
trapped	-0.65
trauma	-0.75
traumas	-0.75
traumatic	-0.75
traumatically	-0.75
traumatized	-0.75
treasure	0.6
treasured	0.6
treasures	0.6
treasuring	0.6
tremble	-0.45
trembled	-0.45
trembles	-0.45
trembling	-0.45
triumph	0.75
triumphant	0.8
triumphantly	0.8
triumphs	0.75
trouble	-0.55
troubled	-0.6
troubles	-0.55
troubling	-0.55
trust	0.55
trusted	0.55
trusting	0.55
trusts	0.55
trustworthily	0.65
trustworthy	0.65
truthful	0.55
truthfully	0.55
ugly	-0.6
unacceptable	-0.6
unacceptably	-0.6
unattractive	-0.44
unaware	-0.3
unawarely	-0.3
unbearable	-0.8
unbearably	-0.8
uncaring	-0.52
uncertain	-0.4
uncertainly	-0.4
uncertainties	-0.45
uncertainty	-0.45
uncomfortable	-0.5
uncomfortably	-0.5
underestimate	-0.35
underestimated	-0.35
underestimates	-0.35
underestimating	-0.35
undermine	-0.5
undermined	-0.5
undermines	-0.5
undermining	-0.5
understand	0.35
understanding	0.5
undesirable	-0.5
undesirably	-0.5
uneasily	-0.55
uneasiness	-0.5
uneasinesses	-0.5
uneasy	-0.55
unemployed	-0.55
unemployedly	-0.55
unemployment	-0.55
unemployments	-0.55
unfair	-0.55
unfairly	-0.55
unforgiving	-0.48
unfortunate	-0.55
unfortunately	-0.55
unfriendly	-0.48
ungrateful	-0.55
ungratefully	-0.55
unhappily	-0.65
unhappiness	-0.65
unhappinesses	-0.65
unhappy	-0.65
unhealthily	-0.55
unhealthy	-0.55
unhelpful	-0.5
unhelpfully	-0.5
uninspiring	-0.56
unjust	-0.6
unjustly	-0.6
unkind	-0.55
unkindly	-0.55
unloved	-0.7
unlovedly	-0.7
unlucky	-0.44
unpleasant	-0.55
unpleasantly	-0.55
unpopular	-0.36
unreliable	-0.5
unreliably	-0.5
unsafe	-0.55
unsafely	-0.55
unsatisfied	-0.48
unsatisfying	-0.48
unstable	-0.5
unstably	-0.5
unsuccessful	-0.52
unsupportive	-0.48
unsure	-0.35
unsurely	-0.35
untrustworthily	-0.6
untrustworthy	-0.6
unwanted	-0.65
unwantedly	-0.65
unwelcome	-0.55
unwelcomely	-0.55
upbeat	0.6
upbeatly	0.6
uplift	0.6
uplifted	0.6
uplifting	0.7
uplifts	0.6
upset	-0.6
upsets	-0.6
upsetting	-0.65
urgent	-0.45
urgently	-0.45
usable	0.3
usably	0.3
useful	0.5
usefully	0.5
useless	-0.65
uselessly	-0.65
vain	-0.45
vainly	-0.45
validate	0.45
validated	0.45
validates	0.45
validating	0.45
validation	0.45
validations	0.45
valuable	0.55
valuably	0.55
value	0.4
valued	0.4
values	0.4
valuing	0.4
vanish	-0.35
vanished	-0.35
vanishes	-0.35
vanishing	-0.35
vent	-0.3
vented	-0.3
venting	-0.3
vents	-0.3
vibrant	0.6
vibrantly	0.6
vicious	-0.75
viciously	-0.75
victim	-0.55
victims	-0.55
victories	0.75
victorious	0.8
victoriously	0.8
victory	0.75
vigilant	0.3
vigilantly	0.3
vigorous	0.45
vigorously	0.45
vile	-0.8
vilely	-0.8
villain	-0.6
villains	-0.6
vindictive	-0.65
vindictively	-0.65
violence	-0.8
violent	-0.8
violently	-0.8
virtue	0.55
virtues	0.55
virtuous	0.6
virtuously	0.6
vital	0.4
vitally	0.4
void	-0.5
voids	-0.5
vomit	-0.55
vomited	-0.55
vomiting	-0.55
vomits	-0.55
vow	0.3
vowed	0.3
vowing	0.3
vows	0.3
vulnerable	-0.45
vulnerably	-0.45
wail	-0.5
wailed	-0.5
wailing	-0.5
wails	-0.5
wander	-0.15
wandered	-0.15
wandering	-0.15
wanders	-0.15
warm	0.55
warmly	0.55
warmth	0.6
waste	-0.5
wasted	-0.5
wasteful	-0.5
wastefully	-0.5
wastes	-0.5
wasting	-0.5
weak	-0.5
weaken	-0.45
weakened	-0.45
weakening	-0.45
weakens	-0.45
weakly	-0.5
weakness	-0.5
weaknesses	-0.5
wealth	0.45
wealthily	0.45
wealthy	0.45
wearily	-0.55
weary	-0.55
weep	-0.65
weeping	-0.65
weeps	-0.65
weird	-0.35
weirdly	-0.35
welcome	0.55
welcomed	0.55
welcomes	0.55
welcoming	0.55
wept	-0.65
whimper	-0.5
whimpered	-0.5
whimpering	-0.5
whimpers	-0.5
whine	-0.45
whined	-0.45
whines	-0.45
whining	-0.45
wholesome	0.55
wholesomely	0.55
wicked	-0.7
wickedly	-0.7
win	0.6
winner	0.6
winners	0.6
winning	0.6
wins	0.6
wisdom	0.55
wise	0.55
wisely	0.55
withdraw	-0.4
withdrawal	-0.55
withdrawals	-0.55
withdrawing	-0.4
withdrawn	-0.45
withdraws	-0.4
withdrew	-0.4
wittily	0.55
witty	0.55
won	0.55
wonderful	0.85
wonderfully	0.85
worried	-0.6
worries	-0.6
worry	-0.6
worrying	-0.6
worse	-0.55
worst	-0.75
worthily	0.55
worthless	-0.8
worthlessly	-0.8
worthwhile	0.55
worthwhilely	0.55
worthy	0.55
wound	-0.6
wounded	-0.6
wounding	-0.6
wounds	-0.6
wreck	-0.55
wrecked	-0.55
wrecking	-0.55
wrecks	-0.55
wrong	-0.45
yell	-0.5
yelled	-0.5
yelling	-0.5
yells	-0.5
zeal	0.5
zealous	0.45
zealously	0.45
zeals	0.5
zest	0.5
zests	0.5
)lex";
    return text;
}

const std::string& default_emotion_lexicon() {
    static const std::string text = R"lex(adore	love
adored	love
affection	love
affectionate	love
afraid	fear
aggravated	anger
alarmed	fear
amazed	surprise
amazing	surprise
anger	anger
angry	anger
annoyed	anger
annoying	anger
anticipate	anticipation
anticipation	anticipation
anxiety	fear
anxious	fear
appalled	disgust
appreciate	gratitude
appreciation	gratitude
appreciative	gratitude
apprehensive	fear
astonished	surprise
astonishing	surprise
awaiting	anticipation
awful	disgust
belief	trust
believe	trust
beloved	love
bitter	anger
blessed	gratitude
bliss	joy
blue	sadness
caring	love
celebrate	joy
celebration	joy
cheerful	joy
cherish	love
cherished	love
comfortable	trust
confide	trust
content	joy
cry	sadness
crying	sadness
curious	anticipation
darling	love
dear	love
defeated	sadness
delight	joy
delighted	joy
dependable	trust
depressed	sadness
depression	sadness
despair	sadness
devastated	sadness
devoted	love
devotion	love
disappointed	sadness
disgust	disgust
disgusted	disgust
disgusting	disgust
distaste	disgust
down	sadness
dread	fear
eager	anticipation
eagerly	anticipation
ecstatic	joy
elated	joy
empty	sadness
enjoy	joy
enjoyed	joy
enraged	anger
excited	joy
excitement	joy
expect	anticipation
expectation	anticipation
expecting	anticipation
faith	trust
faithful	trust
fantastic	joy
fear	fear
fearful	fear
fond	love
fondness	love
forward	anticipation
foul	disgust
frightened	fear
frightening	fear
frustrated	anger
frustrating	anger
frustration	anger
fuming	anger
fun	joy
furious	anger
fury	anger
future	anticipation
glad	joy
glee	joy
gloomy	sadness
grateful	gratitude
gratitude	gratitude
great	joy
grief	sadness
grieving	sadness
gross	disgust
happiness	joy
happy	joy
hate	anger
hatred	anger
heartbroken	sadness
honest	trust
honesty	trust
hope	anticipation
hopeful	anticipation
hopeless	sadness
hoping	anticipation
horrid	disgust
horror	fear
hostile	anger
hurt	sadness
indebted	gratitude
insecure	fear
irate	anger
irritated	anger
joy	joy
joyful	joy
laugh	joy
laughing	joy
laughter	joy
livid	anger
loathing	disgust
loneliness	sadness
lonely	sadness
longing	anticipation
looking	anticipation
lost	sadness
love	love
loved	love
loving	love
loyal	trust
loyalty	trust
mad	anger
melancholy	sadness
merry	joy
miserable	sadness
mourning	sadness
nasty	disgust
nauseating	disgust
nervous	fear
numb	sadness
optimistic	anticipation
outraged	anger
panic	fear
panicked	fear
paranoid	fear
passion	love
passionate	love
phobia	fear
plan	anticipation
planning	anticipation
pleased	joy
pleasure	joy
prepare	anticipation
preparing	anticipation
proud	joy
rage	anger
ready	anticipation
reassured	trust
reliable	trust
remarkable	surprise
repelled	disgust
repulsive	disgust
resent	anger
resentful	anger
resentment	anger
revolting	disgust
romance	love
romantic	love
sad	sadness
sadness	sadness
safe	trust
satisfied	joy
scared	fear
scary	fear
secure	trust
seething	anger
shock	surprise
shocked	surprise
shocking	surprise
sickening	disgust
sincere	trust
smile	joy
smiling	joy
soon	anticipation
sorrow	sadness
sorrowful	sadness
startled	surprise
stunned	surprise
sudden	surprise
suddenly	surprise
sunny	joy
support	trust
supportive	trust
surprise	surprise
surprised	surprise
surprising	surprise
tearful	sadness
tears	sadness
terrified	fear
terrifying	fear
thank	gratitude
thankful	gratitude
thanks	gratitude
threatened	fear
thrilled	joy
timid	fear
trust	trust
trusted	trust
trusting	trust
unbelievable	surprise
uneasy	fear
unexpected	surprise
unhappy	sadness
upbeat	joy
vile	disgust
weeping	sadness
wonder	anticipation
wonderful	joy
wondering	anticipation
worried	fear
worry	fear
worrying	fear
worthless	sadness
wow	surprise
yearning	anticipation
)lex";
    return text;
}

}  // namespace convoeval::pipeline
