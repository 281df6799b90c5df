#!/usr/bin/env python3
"""Generates the mini knowledge-graph fixture and its two-source biography corpus.

Usage: python3 scripts/gen_mini_ekg.py crates/biotimeline/fixtures

Output is deterministic (fixed seed). The John Adams subgraph and its
biographies are written by hand; the remaining persons are synthetic.
"""
import math
import os
import random
import sys

rng = random.Random(20190415)

ENT_HEADER = "id\tlabel\tkind\ttype_tags\tbirth_or_start\tdeath_or_end\tlat\tlon\tlink_count\tdescription"
EVT_HEADER = "id\tlabel\tstart\tend\tlat\tlon\tparticipants\tdescription"
FACT_HEADER = "subject\tproperty\tproperty_label\tobject_kind\tobject\tvalidity_start\tvalidity_end"

PLABEL = {
    "born": "Born",
    "died": "Died",
    "spouse": "Spouse",
    "child": "Child",
    "positionHeld": "Position held",
    "signatory": "Signatory",
    "educatedAt": "Educated at",
    "memberOf": "Member of",
    "award": "Award received",
    "residence": "Residence",
    "participant": "Participant in",
    "employer": "Employer",
}

entities = {}  # id -> dict
events = {}
facts = []


def ent(id, label, kind, tags="", start="", end="", loc=None, links=0, desc=""):
    assert id not in entities and id not in events, id
    entities[id] = dict(id=id, label=label, kind=kind, tags=tags, start=start, end=end,
                        loc=loc, links=links, desc=desc)


def evt(id, label, start, end, loc, participants, desc):
    assert id not in entities and id not in events, id
    events[id] = dict(id=id, label=label, start=start, end=end, loc=loc,
                      participants=participants, desc=desc)


def fact(subject, prop, obj, start="", end="", kind="entity"):
    facts.append((subject, prop, PLABEL[prop], kind, obj, start, end))


def year_of(d):
    return int(d[:4]) if d else None


PLACES = {
    "Braintree": ("Braintree", "1640", (42.2079, -71.0040), 210),
    "Boston": ("Boston", "1630", (42.3601, -71.0589), 3100),
    "Philadelphia": ("Philadelphia", "1682", (39.9526, -75.1652), 2900),
    "Paris": ("Paris", "", (48.8566, 2.3522), 4800),
    "London": ("London", "", (51.5072, -0.1276), 5200),
    "The_Hague": ("The Hague", "1248", (52.0705, 4.3007), 900),
    "Washington_DC": ("Washington, D.C.", "1790-07-16", (38.9072, -77.0369), 3600),
    "Peacefield": ("Peacefield", "1731", (42.2565, -71.0112), 80),
    "Monticello": ("Monticello", "1772", (38.0086, -78.4532), 450),
    "Mount_Vernon": ("Mount Vernon", "1734", (38.7293, -77.1073), 700),
    "Bern": ("Bern", "1191", (46.9480, 7.4474), 800),
    "Princeton_NJ": ("Princeton", "1683", (40.3573, -74.6672), 600),
    "Rosario": ("Rosario", "1793", (-32.9442, -60.6505), 500),
    "Los_Angeles": ("Los Angeles", "1781-09-04", (34.0522, -118.2437), 4100),
    "Barcelona": ("Barcelona", "", (41.3874, 2.1686), 3900),
    "Harbor_City": ("Harbor City", "1690", (44.10, -69.20), 140),
    "Kingsport": ("Kingsport", "1702", (45.40, -63.80), 95),
    "Northfield": ("Northfield", "1721", (43.00, -72.60), 70),
    "Riverside": ("Riverside", "1740", (41.20, -73.90), 60),
    "Lakeside": ("Lakeside", "1650", (46.30, 6.60), 85),
    "Westria_Capital": ("Westria City", "1600", (50.40, 3.10), 110),
}
for pid, (label, start, loc, links) in PLACES.items():
    ent(pid, label, "other", "place", start, "", loc, links, f"Place: {label}.")

# Offices, documents, organizations, awards.
OTHER = [
    ("President_of_the_United_States", "President of the United States", "office", "1789-04-30", "", (38.8977, -77.0365), 5000),
    ("Vice_President_of_the_United_States", "Vice President of the United States", "office", "1789-04-21", "", None, 2500),
    ("US_Ambassador_to_the_UK", "United States Ambassador to the United Kingdom|ambassador to Great Britain", "office", "1785", "", (51.5072, -0.1276), 300),
    ("US_Ambassador_to_the_Netherlands", "United States Ambassador to the Netherlands|ambassador to the Netherlands", "office", "1782", "", (52.0705, 4.3007), 150),
    ("US_Secretary_of_State", "United States Secretary of State|Secretary of State", "office", "1789-07-27", "", None, 1500),
    ("Chief_Justice_of_the_United_States", "Chief Justice of the United States|Chief Justice", "office", "1789", "", None, 1300),
    ("Commander_in_Chief_Continental_Army", "Commander-in-Chief of the Continental Army", "office", "1775-06-15", "1783-12-23", None, 900),
    ("UN_Special_Envoy", "Special Envoy of the UN High Commissioner for Refugees|UNHCR Special Envoy", "office", "2012", "", (46.2044, 6.1432), 350),
    ("Declaration_of_Independence", "United States Declaration of Independence|Declaration of Independence", "document", "1776-07-04", "1776-07-04", (39.9489, -75.1500), 3000),
    ("Treaty_of_Paris_1783", "Treaty of Paris", "document", "1783-09-03", "1783-09-03", (48.8566, 2.3522), 900),
    ("US_Constitution", "Constitution of the United States|Constitution", "document", "1787-09-17", "1787-09-17", (39.9489, -75.1500), 3500),
    ("Harvard_University", "Harvard University|Harvard College|Harvard", "organization", "1636", "", (42.3770, -71.1167), 4000),
    ("Continental_Congress", "Continental Congress", "organization", "1774-09-05", "1789-03-04", (39.9489, -75.1500), 1100),
    ("American_Academy_of_Arts_and_Sciences", "American Academy of Arts and Sciences", "organization", "1780-05-04", "", (42.3736, -71.1097), 500),
    ("American_Philosophical_Society", "American Philosophical Society", "organization", "1743", "", (39.9489, -75.1478), 450),
    ("Royal_Society", "Royal Society", "organization", "1660-11-28", "", (51.5060, -0.1320), 2500),
    ("College_of_William_and_Mary", "College of William & Mary|William and Mary", "organization", "1693-02-08", "", (37.2707, -76.7075), 900),
    ("ETH_Zurich", "ETH Zurich|Swiss Federal Polytechnic", "organization", "1855", "", (47.3763, 8.5476), 1500),
    ("Swiss_Patent_Office", "Swiss Patent Office|patent office", "organization", "1888", "", (46.9480, 7.4474), 200),
    ("Institute_for_Advanced_Study", "Institute for Advanced Study", "organization", "1930", "", (40.3318, -74.6686), 700),
    ("FC_Barcelona", "FC Barcelona|Barcelona", "organization", "1899-11-29", "", (41.3809, 2.1228), 3000),
    ("Paris_Saint_Germain", "Paris Saint-Germain|PSG", "organization", "1970-08-12", "", (48.8414, 2.2530), 2000),
    ("Inter_Miami", "Inter Miami CF|Inter Miami", "organization", "2018-01-29", "", (26.1931, -80.1611), 600),
    ("Nobel_Prize_in_Physics", "Nobel Prize in Physics|Nobel Prize", "award", "1901", "", None, 2000),
    ("Academy_Award", "Academy Award|Oscar", "award", "1929-05-16", "", None, 2500),
    ("Ballon_dOr", "Ballon d'Or", "award", "1956", "", None, 900),
    ("Copley_Medal", "Copley Medal", "award", "1731", "", None, 300),
    ("Presidential_Medal_of_Freedom", "Presidential Medal of Freedom", "award", "1963-02-22", "", None, 600),
    # Synthetic institutions.
    ("Mayor_of_Harbor_City", "Mayor of Harbor City", "office", "1700", "", (44.10, -69.20), 120),
    ("Governor_of_Northland", "Governor of Northland", "office", "1700", "", (43.00, -72.60), 400),
    ("Chief_Justice_of_Northland", "Chief Justice of Northland", "office", "1750", "", None, 250),
    ("Ambassador_to_Westria", "Ambassador to Westria", "office", "1720", "", (50.40, 3.10), 90),
    ("Director_of_the_National_Observatory", "Director of the National Observatory", "office", "1760", "", None, 150),
    ("Conductor_of_the_Grand_Orchestra", "Conductor of the Grand Orchestra", "office", "1800", "", None, 60),
    ("Northland_Railway", "Northland Railway Company", "organization", "1830", "1960", None, 130),
    ("Harbor_City_Gazette", "Harbor City Gazette|the Gazette", "organization", "1750", "", (44.10, -69.20), 110),
    ("National_Observatory", "National Observatory", "organization", "1760", "", (43.10, -72.50), 160),
    ("Grand_Orchestra", "Grand Orchestra", "organization", "1800", "", (45.40, -63.80), 70),
    ("Lakeside_University", "Lakeside University|Lakeside College", "organization", "1650", "", (46.30, 6.60), 380),
    ("Northfield_College", "Northfield College", "organization", "1700", "", (43.00, -72.60), 150),
    ("Riverside_Academy", "Riverside Academy", "organization", "1720", "", (41.20, -73.90), 90),
    ("Northland_Academy_of_Sciences", "Northland Academy of Sciences", "organization", "1740", "", None, 220),
    ("Harbor_City_Council", "Harbor City Council", "organization", "1700", "", (44.10, -69.20), 50),
    ("Society_of_Mountain_Explorers", "Society of Mountain Explorers", "organization", "1850", "", None, 40),
    ("National_Science_Prize", "National Science Prize", "award", "1800", "", None, 200),
    ("Golden_Pen_Award", "Golden Pen Award", "award", "1850", "", None, 150),
    ("Order_of_Merit", "Order of Merit", "award", "1700", "", None, 500),
    ("Charter_of_Northland", "Charter of Northland", "document", "1776-05-01", "1776-05-01", (43.00, -72.60), 350),
    ("Treaty_of_Kingsport", "Treaty of Kingsport", "document", "1815-06-09", "1815-06-09", (45.40, -63.80), 260),
    ("Harbor_Accord", "Harbor Accord", "document", "1890-03-12", "1890-03-12", (44.10, -69.20), 120),
    ("Declaration_of_Rivers", "Declaration of Rivers", "document", "1848-02-21", "1848-02-21", (41.20, -73.90), 180),
    ("Northland_Water_Act", "Northland Water Act", "document", "1931-07-01", "1931-07-01", None, 70),
]
for oid, label, tag, start, end, loc, links in OTHER:
    ent(oid, label, "other", tag, start, end, loc, links, "")

# Real persons.
PERSONS = [
    ("John_Adams", "John Adams", "politician|lawyer|diplomat", "1735-10-30", "1826-07-04", 950,
     "American statesman, lawyer and diplomat who served as the second president of the United States from 1797 to 1801."),
    ("Abigail_Adams", "Abigail Adams|Abigail Smith", "writer", "1744-11-22", "1818-10-28", 400,
     "Wife and closest advisor of John Adams."),
    ("John_Quincy_Adams", "John Quincy Adams", "politician|diplomat", "1767-07-11", "1848-02-23", 800,
     "Sixth president of the United States."),
    ("Nabby_Adams", "Abigail Adams Smith|Nabby Adams", "", "1765-07-14", "1813-08-15", 60, ""),
    ("Charles_Adams", "Charles Adams", "lawyer", "1770-05-29", "1800-11-30", 40, ""),
    ("Thomas_Boylston_Adams", "Thomas Boylston Adams", "lawyer", "1772-09-15", "1832-03-13", 45, ""),
    ("Samuel_Adams", "Samuel Adams", "politician", "1722-09-27", "1803-10-02", 600,
     "American statesman and Founding Father."),
    ("Ansel_Adams", "Ansel Adams", "artist", "1902-02-20", "1984-04-22", 300, "American landscape photographer."),
    ("Charles_Francis_Adams", "Charles Francis Adams Sr.|Charles Francis Adams", "politician|diplomat", "1807-08-18", "1886-11-21", 200, ""),
    ("Thomas_Jefferson", "Thomas Jefferson", "politician|diplomat|lawyer", "1743-04-13", "1826-07-04", 900,
     "Third president of the United States."),
    ("George_Washington", "George Washington", "politician|military_officer", "1732-02-22", "1799-12-14", 1000,
     "First president of the United States."),
    ("Benjamin_Franklin", "Benjamin Franklin", "scientist|writer|diplomat", "1706-01-17", "1790-04-17", 880,
     "American polymath and Founding Father."),
    ("John_Jay", "John Jay", "lawyer|diplomat|politician", "1745-12-12", "1829-05-17", 350,
     "First Chief Justice of the United States."),
    ("Albert_Einstein", "Albert Einstein", "scientist", "1879-03-14", "1955-04-18", 990,
     "Theoretical physicist who developed the theory of relativity."),
    ("Angelina_Jolie", "Angelina Jolie", "artist", "1975-06-04", "", 700, "American actress and humanitarian."),
    ("Lionel_Messi", "Lionel Messi", "athlete", "1987-06-24", "", 850, "Argentine footballer."),
    ("Ida_Hermit", "Ida Hermit", "", "1850", "1920", 1, ""),
]
for pid, label, tags, b, d, links, desc in PERSONS:
    ent(pid, label, "person", tags, b, d, None, links, desc)

# John Adams subgraph.
JA = "John_Adams"
fact(JA, "born", "1735-10-30", kind="date")
fact(JA, "died", "1826-07-04", kind="date")
fact(JA, "spouse", "Abigail_Adams", "1764-10-25", "1818-10-28")
for c in ["John_Quincy_Adams", "Nabby_Adams", "Charles_Adams", "Thomas_Boylston_Adams"]:
    fact(JA, "child", c)
fact(JA, "educatedAt", "Harvard_University", "1751", "1755")
fact(JA, "memberOf", "Continental_Congress", "1774-09-05", "1778-11-17")
fact(JA, "memberOf", "American_Academy_of_Arts_and_Sciences")
fact(JA, "positionHeld", "US_Ambassador_to_the_Netherlands", "1782-04-19", "1788-03-30")
fact(JA, "positionHeld", "US_Ambassador_to_the_UK", "1785-04-01", "1788-02-20")
fact(JA, "positionHeld", "Vice_President_of_the_United_States", "1789-04-21", "1797-03-04")
fact(JA, "positionHeld", "President_of_the_United_States", "1797-03-04", "1801-03-04")
fact(JA, "signatory", "Declaration_of_Independence")
fact(JA, "signatory", "Treaty_of_Paris_1783")
fact(JA, "residence", "Braintree")
fact(JA, "residence", "Peacefield")
fact(JA, "participant", "Boston_Massacre_Trials")
# A relation that only exists after his death: dropped by the lifespan intersection.
fact(JA, "memberOf", "Institute_for_Advanced_Study")

fact("Abigail_Adams", "born", "1744-11-22", kind="date")
fact("Abigail_Adams", "died", "1818-10-28", kind="date")
fact("Abigail_Adams", "spouse", "John_Adams", "1764-10-25", "1818-10-28")
for c in ["John_Quincy_Adams", "Nabby_Adams", "Charles_Adams", "Thomas_Boylston_Adams"]:
    fact("Abigail_Adams", "child", c)
fact("Abigail_Adams", "residence", "Peacefield")

JQA = "John_Quincy_Adams"
fact(JQA, "born", "1767-07-11", kind="date")
fact(JQA, "died", "1848-02-23", kind="date")
fact(JQA, "educatedAt", "Harvard_University", "1785", "1787")
fact(JQA, "positionHeld", "US_Secretary_of_State", "1817-09-22", "1825-03-04")
fact(JQA, "positionHeld", "President_of_the_United_States", "1825-03-04", "1829-03-04")
fact(JQA, "positionHeld", "US_Ambassador_to_the_Netherlands", "1794", "1797")
fact(JQA, "child", "Charles_Francis_Adams")
fact(JQA, "memberOf", "American_Academy_of_Arts_and_Sciences")

for pid, b, d in [("Nabby_Adams", "1765-07-14", "1813-08-15"), ("Charles_Adams", "1770-05-29", "1800-11-30"),
                  ("Thomas_Boylston_Adams", "1772-09-15", "1832-03-13")]:
    fact(pid, "born", b, kind="date")
    fact(pid, "died", d, kind="date")
fact("Thomas_Boylston_Adams", "educatedAt", "Harvard_University", "1786", "1790")
fact("Charles_Adams", "educatedAt", "Harvard_University", "1785", "1789")

SA = "Samuel_Adams"
fact(SA, "born", "1722-09-27", kind="date")
fact(SA, "died", "1803-10-02", kind="date")
fact(SA, "educatedAt", "Harvard_University", "1736", "1740")
fact(SA, "memberOf", "Continental_Congress", "1774-09-05", "1781")
fact(SA, "signatory", "Declaration_of_Independence")
fact(SA, "residence", "Boston")

AA = "Ansel_Adams"
fact(AA, "born", "1902-02-20", kind="date")
fact(AA, "died", "1984-04-22", kind="date")
fact(AA, "award", "Presidential_Medal_of_Freedom", "1980", "1980")
fact(AA, "memberOf", "American_Academy_of_Arts_and_Sciences", "1966", "1984")
fact(AA, "residence", "Los_Angeles")

CFA = "Charles_Francis_Adams"
fact(CFA, "born", "1807-08-18", kind="date")
fact(CFA, "died", "1886-11-21", kind="date")
fact(CFA, "educatedAt", "Harvard_University", "1821", "1825")
fact(CFA, "positionHeld", "US_Ambassador_to_the_UK", "1861-05-13", "1868-05-13")

TJ = "Thomas_Jefferson"
fact(TJ, "born", "1743-04-13", kind="date")
fact(TJ, "died", "1826-07-04", kind="date")
fact(TJ, "educatedAt", "College_of_William_and_Mary", "1760", "1762")
fact(TJ, "signatory", "Declaration_of_Independence")
fact(TJ, "positionHeld", "US_Secretary_of_State", "1790-03-22", "1793-12-31")
fact(TJ, "positionHeld", "Vice_President_of_the_United_States", "1797-03-04", "1801-03-04")
fact(TJ, "positionHeld", "President_of_the_United_States", "1801-03-04", "1809-03-04")
fact(TJ, "memberOf", "American_Philosophical_Society", "1780", "1826")
fact(TJ, "residence", "Monticello")

GW = "George_Washington"
fact(GW, "born", "1732-02-22", kind="date")
fact(GW, "died", "1799-12-14", kind="date")
fact(GW, "positionHeld", "Commander_in_Chief_Continental_Army")
fact(GW, "positionHeld", "President_of_the_United_States", "1789-04-30", "1797-03-04")
fact(GW, "signatory", "US_Constitution")
fact(GW, "residence", "Mount_Vernon")
fact(GW, "memberOf", "Continental_Congress", "1774-09-05", "1775-06-15")

BF = "Benjamin_Franklin"
fact(BF, "born", "1706-01-17", kind="date")
fact(BF, "died", "1790-04-17", kind="date")
fact(BF, "signatory", "Declaration_of_Independence")
fact(BF, "signatory", "Treaty_of_Paris_1783")
fact(BF, "signatory", "US_Constitution")
fact(BF, "award", "Copley_Medal", "1753", "1753")
fact(BF, "memberOf", "Royal_Society", "1756", "1790")
fact(BF, "memberOf", "American_Philosophical_Society")
fact(BF, "residence", "Philadelphia")

JJ = "John_Jay"
fact(JJ, "born", "1745-12-12", kind="date")
fact(JJ, "died", "1829-05-17", kind="date")
fact(JJ, "signatory", "Treaty_of_Paris_1783")
fact(JJ, "positionHeld", "Chief_Justice_of_the_United_States", "1789-10-19", "1795-06-29")
fact(JJ, "memberOf", "Continental_Congress", "1774", "1779")

AE = "Albert_Einstein"
fact(AE, "born", "1879-03-14", kind="date")
fact(AE, "died", "1955-04-18", kind="date")
fact(AE, "educatedAt", "ETH_Zurich", "1896", "1900")
fact(AE, "employer", "Swiss_Patent_Office", "1902-06-23", "1909-10-15")
fact(AE, "employer", "Institute_for_Advanced_Study", "1933-10-17", "1955-04-18")
fact(AE, "award", "Nobel_Prize_in_Physics", "1921", "1921")
fact(AE, "award", "Copley_Medal", "1925", "1925")
fact(AE, "memberOf", "Royal_Society", "1921", "1955")
fact(AE, "residence", "Bern", "1902", "1909")
fact(AE, "residence", "Princeton_NJ", "1933", "1955")

AJ = "Angelina_Jolie"
fact(AJ, "born", "1975-06-04", kind="date")
fact(AJ, "award", "Academy_Award", "2000-03-26", "2000-03-26")
fact(AJ, "positionHeld", "UN_Special_Envoy", "2012-04-17", "2022-12-15")
fact(AJ, "residence", "Los_Angeles")

LM = "Lionel_Messi"
fact(LM, "born", "1987-06-24", kind="date")
fact(LM, "employer", "FC_Barcelona", "2004-10-16", "2021-08-05")
fact(LM, "employer", "Paris_Saint_Germain", "2021-08-10", "2023-06-30")
fact(LM, "employer", "Inter_Miami", "2023-07-15", "")
fact(LM, "award", "Ballon_dOr", "2009-12-01", "2009-12-01")
fact(LM, "residence", "Rosario", "", "2000")
fact(LM, "residence", "Barcelona")

# Events of the real persons.
REAL_EVENTS = [
    ("Boston_Massacre_Trials", "Boston Massacre trials", "1770-10-24", "1770-12-05", PLACES["Boston"][2], [JA],
     "John Adams defends the British soldiers accused in the Boston Massacre."),
    ("Signing_of_the_Declaration", "Signing of the Declaration of Independence", "1776-07-04", "1776-08-02",
     (39.9489, -75.1500), [JA, TJ, BF, SA], "Delegates of the Continental Congress sign the Declaration of Independence."),
    ("Treaty_of_Paris_Signing", "Signing of the Treaty of Paris", "1783-09-03", "1783-09-03", PLACES["Paris"][2],
     [JA, BF, JJ], "The Treaty of Paris ends the American Revolutionary War."),
    ("Constitutional_Convention", "Constitutional Convention", "1787-05-25", "1787-09-17", (39.9489, -75.1500),
     [GW, BF], "Delegates draft the Constitution of the United States in Philadelphia."),
    ("Inauguration_of_John_Adams", "Inauguration of John Adams", "1797-03-04", "1797-03-04", (39.9496, -75.1503),
     [JA, TJ, GW], "John Adams is inaugurated as the second president of the United States."),
    ("XYZ_Affair", "XYZ Affair", "1797-10", "1798-04", None, [JA],
     "A diplomatic incident between France and the United States during the Adams administration."),
    ("Fries_Amnesty", "Amnesty for Fries's Rebellion", "1800-05-21", "1800-05-21", (40.3356, -75.9269), [JA],
     "President John Adams issues general amnesty for the Pennsylvania Dutch farmers who participated in Fries's Rebellion."),
    ("Election_of_1800", "United States presidential election of 1800", "1800-10-31", "1800-12-03", None, [JA, TJ],
     "Thomas Jefferson defeats the incumbent John Adams."),
    ("Adams_Jefferson_Deaths", "Deaths of Adams and Jefferson", "1826-07-04", "1826-07-04", None, [JA, TJ],
     "John Adams and Thomas Jefferson both die on the fiftieth anniversary of the Declaration of Independence."),
    ("Crossing_of_the_Delaware", "Washington's crossing of the Delaware River", "1776-12-25", "1776-12-26",
     (40.2960, -74.8770), [GW], "George Washington crosses the Delaware River before the Battle of Trenton."),
    ("Kite_Experiment", "Franklin's kite experiment", "1752-06-15", "1752-06-15", PLACES["Philadelphia"][2], [BF],
     "Benjamin Franklin demonstrates the electrical nature of lightning."),
    ("Annus_Mirabilis", "Annus mirabilis papers", "1905-03-18", "1905-09-27", PLACES["Bern"][2], [AE],
     "Albert Einstein publishes four groundbreaking papers."),
    ("Nobel_Ceremony_1922", "Nobel Prize ceremony 1922", "1922-12-10", "1922-12-10", (59.3293, 18.0686), [AE],
     "Albert Einstein is awarded the 1921 Nobel Prize in Physics."),
    ("Oscars_2000", "72nd Academy Awards", "2000-03-26", "2000-03-26", PLACES["Los_Angeles"][2], [AJ],
     "Angelina Jolie wins the Academy Award for Best Supporting Actress."),
    ("Ballon_dOr_2009", "2009 Ballon d'Or", "2009-12-01", "2009-12-01", PLACES["Paris"][2], [LM],
     "Lionel Messi wins his first Ballon d'Or."),
    ("World_Cup_Final_2022", "2022 FIFA World Cup Final", "2022-12-18", "2022-12-18", (25.4208, 51.4904), [LM],
     "Argentina wins the World Cup with Lionel Messi as captain."),
    ("Photography_Exhibition_1936", "Ansel Adams exhibition at An American Place", "1936-11", "1936-12", None, [AA],
     "Ansel Adams holds a solo exhibition in New York."),
]
for eid, label, s, e, loc, parts, desc in REAL_EVENTS:
    if len(s) == 7:
        s = s + "-01"
    if len(e) == 7:
        e = e + "-28"
    evt(eid, label, s, e, loc, parts, desc)

# Synthetic persons.
FIRST = ["Clara", "Edmund", "Miriam", "Tobias", "Helena", "Victor", "Rosalind", "Ambrose", "Lydia", "Felix",
         "Beatrix", "Silas", "Odette", "Julian", "Imogen", "Caspar", "Theodora", "Rufus", "Vera", "Lucian",
         "Agnes", "Horace", "Isolde", "Magnus", "Celia", "Dorian", "Esme", "Gideon", "Marguerite", "Oswin",
         "Pearl", "Quentin", "Sabine"]
LAST = ["Whitcombe", "Farrow", "Ashdown", "Pellham", "Kestrel", "Marchetti", "Oakhurst", "Thorne", "Vandermeer",
        "Blackwood", "Carrow", "Delacroix", "Everly", "Galbraith", "Hollis", "Iverson", "Jessop", "Lindqvist",
        "Moreland", "Northcott", "Ormsby", "Prescott", "Quill", "Radcliffe", "Sterling", "Tremaine", "Underhill",
        "Voss", "Wexley", "Yardley", "Zeller", "Brightwater", "Cromwell"]
TAGS = ["politician", "lawyer", "diplomat", "writer", "scientist", "military_officer", "artist", "athlete"]

OFFICES_BY_TAG = {
    "politician": ["Mayor_of_Harbor_City", "Governor_of_Northland"],
    "lawyer": ["Chief_Justice_of_Northland"],
    "diplomat": ["Ambassador_to_Westria"],
    "scientist": ["Director_of_the_National_Observatory"],
    "artist": ["Conductor_of_the_Grand_Orchestra"],
    "writer": [],
    "military_officer": ["Governor_of_Northland"],
    "athlete": [],
}
EMPLOYERS = ["Northland_Railway", "Harbor_City_Gazette", "National_Observatory", "Grand_Orchestra"]
SCHOOLS = ["Lakeside_University", "Northfield_College", "Riverside_Academy"]
SOCIETIES = ["Northland_Academy_of_Sciences", "Harbor_City_Council", "Society_of_Mountain_Explorers", "Royal_Society"]
AWARDS = ["National_Science_Prize", "Golden_Pen_Award", "Order_of_Merit"]
DOCS = ["Charter_of_Northland", "Treaty_of_Kingsport", "Harbor_Accord", "Declaration_of_Rivers", "Northland_Water_Act"]
HOMES = ["Harbor_City", "Kingsport", "Northfield", "Riverside", "Lakeside", "Westria_Capital"]


def start_year(eid):
    return year_of(entities[eid]["start"]) or -10_000


def end_year(eid):
    return year_of(entities[eid]["end"]) or 10_000


synthetic = []
for i in range(33):
    name = f"{FIRST[i]} {LAST[i]}"
    pid = f"{FIRST[i]}_{LAST[i]}"
    birth_year = 1700 + (i * 8) + rng.randint(0, 6)
    birth = f"{birth_year}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
    living = birth_year >= 1945
    death_year = None if living else birth_year + rng.randint(48, 88)
    death = "" if living else f"{death_year}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
    tags = sorted(rng.sample(TAGS, rng.randint(1, 2)))
    links = int(math.exp(rng.uniform(1.5, 6.2)))
    # One person with unknown dates and one with a year-only lifespan.
    if i == 7:
        birth, death, death_year = "", "", None
    if i == 12:
        birth, death = str(birth_year), str(death_year)
    ent(pid, name, "person", "|".join(tags), birth, death, None, links, f"{name} ({', '.join(tags)}).")
    synthetic.append(dict(id=pid, name=name, birth=birth, death=death, by=birth_year,
                          dy=death_year, tags=tags, links=links))


def life_end(p):
    return p["dy"] if p["dy"] else 2024


synthetic_events = []
EVENT_THEMES = [
    ("Flood", "Flooding in {place} displaces thousands; {who} organize relief."),
    ("Festival", "The {place} festival opens with a speech by {who}."),
    ("Strike", "Dock workers in {place} strike; {who} mediate."),
    ("Expedition", "An expedition departs from {place}, led by {who}."),
    ("Conference", "A scientific conference in {place} features {who}."),
    ("Election", "{who} contest the election in {place}."),
    ("Fire", "A great fire in {place}; {who} lead the rebuilding."),
    ("Exhibition", "An exhibition in {place} shows work by {who}."),
]

for p in synthetic:
    facts_before = len(facts)
    pid = p["id"]
    by, dy = p["by"], life_end(p)
    if p["birth"]:
        fact(pid, "born", p["birth"], kind="date")
    if p["death"]:
        fact(pid, "died", p["death"], kind="date")

    # Spouse: another synthetic person of similar age.
    peers = [q for q in synthetic if q["id"] != pid and abs(q["by"] - by) <= 12]
    if peers and rng.random() < 0.7:
        q = rng.choice(peers)
        sy = by + rng.randint(20, 32)
        ey = min(dy, life_end(q), sy + rng.randint(5, 40))
        if ey >= sy:
            fact(pid, "spouse", q["id"], f"{sy}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}",
                 str(ey) if rng.random() < 0.3 else "")

    # Children: younger synthetic persons (validity inferred from their existence).
    kids = [q for q in synthetic if 18 <= q["by"] - by <= 45]
    for q in rng.sample(kids, min(len(kids), rng.randint(0, 2))):
        fact(pid, "child", q["id"])

    # Positions according to the person's occupations.
    for tag in p["tags"]:
        for office in OFFICES_BY_TAG[tag]:
            if rng.random() < 0.8:
                lo = max(by + 25, start_year(office))
                hi = min(dy, end_year(office))
                if lo < hi:
                    s = rng.randint(lo, hi - 1)
                    e = min(hi, s + rng.randint(1, 12))
                    fact(pid, "positionHeld", office, str(s), str(e))

    school = rng.choice(SCHOOLS)
    if start_year(school) < by + 18 and rng.random() < 0.8:
        fact(pid, "educatedAt", school, str(by + 17), str(by + 21))

    for soc in rng.sample(SOCIETIES, rng.randint(0, 2)):
        if rng.random() < 0.5:
            s = max(by + 25, start_year(soc))
            if s < dy:
                fact(pid, "memberOf", soc, str(s), "")
        else:
            fact(pid, "memberOf", soc)

    if rng.random() < 0.6:
        award = rng.choice(AWARDS)
        lo = max(by + 30, start_year(award))
        if lo < dy:
            y = rng.randint(lo, dy)
            fact(pid, "award", award, str(y), str(y))

    if rng.random() < 0.6:
        emp = rng.choice(EMPLOYERS)
        lo = max(by + 20, start_year(emp))
        hi = min(dy, end_year(emp))
        if lo < hi:
            s = rng.randint(lo, hi - 1)
            fact(pid, "employer", emp, f"{s}-{rng.randint(1, 12):02d}-01", str(min(hi, s + rng.randint(2, 20))))

    for doc in DOCS:
        y = year_of(entities[doc]["start"])
        if by + 25 <= y <= dy and rng.random() < 0.7:
            fact(pid, "signatory", doc)

    for home in rng.sample(HOMES, rng.randint(1, 2)):
        fact(pid, "residence", home)

    # A relation whose object ceased to exist before the person was born.
    if p["by"] > 1965 - 5:
        fact(pid, "employer", "Northland_Railway")

    p["n_facts"] = len(facts) - facts_before

# Synthetic events: each with one to three synthetic participants.
eid_counter = 0
for round_ in range(2):
    for p in synthetic:
        if len(synthetic_events) >= 43:
            break
        if rng.random() < 0.35 and round_ == 1:
            continue
        theme, tmpl = rng.choice(EVENT_THEMES)
        home = rng.choice(HOMES)
        by, dy = p["by"], life_end(p)
        y = rng.randint(by + 20, max(by + 21, dy - 1))
        others = [q for q in synthetic if q["id"] != p["id"] and q["by"] + 15 <= y <= life_end(q)]
        parts = [p] + rng.sample(others, min(len(others), rng.randint(0, 2)))
        label = f"{entities[home]['label']} {theme} of {y}"
        eid = f"{home}_{theme}_{y}"
        if eid in events:
            continue
        start = f"{y}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
        end = start if rng.random() < 0.5 else str(y)
        if end == str(y):
            start = str(y)
        loc = entities[home]["loc"] if rng.random() < 0.85 else None
        who = " and ".join(q["name"] for q in parts)
        evt(eid, label, start, end, loc, [q["id"] for q in parts], tmpl.format(place=entities[home]["label"], who=who))
        synthetic_events.append((eid, label, y, parts))
        for q in parts:
            if rng.random() < 0.6:
                fact(q["id"], "participant", eid)

# A fact about a non-person subject (ignored by relation extraction).
fact("Harvard_University", "residence", "Boston")


# --- Corpus ---------------------------------------------------------------

JA_WIKI = """John Adams was born on October 30, 1735, in Braintree, Massachusetts.
He graduated from Harvard College in 1755 and became a lawyer.
In 1764, Adams married Abigail Smith.
Their son John Quincy Adams was born in 1767.
In 1770 he defended the British soldiers in the Boston Massacre trials.
Adams was a delegate to the Continental Congress.
Adams signed the Declaration of Independence in 1776.
He helped negotiate the Treaty of Paris, which was signed in 1783.
He served as Vice President of the United States from 1789 to 1797.
Adams was elected President of the United States and served from 1797 to 1801.
In 1800, President John Adams issued a general amnesty for the farmers of Fries's Rebellion.
Adams died on July 4, 1826, the same day as Thomas Jefferson.
"""

JA_BIO = """John Adams was born in 1735 in Braintree.
He married Abigail Smith in 1764 and the couple had six children.
Abigail Adams Smith, their first child, was born in 1765.
Charles Adams was born in 1770 and Thomas Boylston Adams in 1772.
John Quincy Adams, born in 1767, later became president himself.
He was ambassador to the Netherlands in 1782 and ambassador to Great Britain in 1785.
He was a delegate to the Continental Congress in 1774.
He was the second President of the United States, serving until 1801.
He retired to Peacefield and died there in 1826.
"""

HAND = {
    ("wikipedia", "Abigail_Adams"): """Abigail Adams was born Abigail Smith in 1744.
She married John Adams in 1764.
Her son John Quincy Adams was born in 1767.
She died in 1818 at Peacefield.
""",
    ("bio_web", "Abigail_Adams"): """Abigail Smith was born in 1744 in Weymouth.
She wed the young lawyer John Adams in 1764.
Her letters remain a treasured record of the revolutionary era.
She died of typhoid fever in 1818.
""",
    ("wikipedia", "John_Quincy_Adams"): """John Quincy Adams was born in 1767.
He studied at Harvard College and graduated in 1787.
He served as United States Secretary of State from 1817 to 1825.
He was President of the United States from 1825 to 1829.
He died in 1848.
""",
    ("bio_web", "John_Quincy_Adams"): """John Quincy Adams was born in 1767, the son of John Adams.
He was appointed ambassador to the Netherlands in 1794.
His son Charles Francis Adams was born in 1807.
He collapsed in the House chamber and died in 1848.
""",
    ("wikipedia", "Samuel_Adams"): """Samuel Adams was born in Boston in 1722.
He graduated from Harvard College in 1740.
He was a member of the Continental Congress from 1774.
He signed the Declaration of Independence in 1776.
Samuel Adams died in 1803.
""",
    ("bio_web", "Samuel_Adams"): """Samuel Adams was born in 1722.
He organized resistance in Boston in 1765.
He died in 1803.
""",
    ("wikipedia", "Thomas_Jefferson"): """Thomas Jefferson was born in 1743.
He attended the College of William & Mary from 1760.
He was the principal author of the Declaration of Independence, adopted in 1776.
He was Secretary of State from 1790 to 1793.
He served as Vice President of the United States from 1797 and as President of the United States from 1801 to 1809.
He died at Monticello in 1826.
""",
    ("bio_web", "Thomas_Jefferson"): """Thomas Jefferson was born in 1743 in Shadwell.
He began building Monticello in 1768.
He became the third President of the United States in 1801.
He died in 1826.
""",
    ("wikipedia", "George_Washington"): """George Washington was born in 1732.
He was appointed Commander-in-Chief of the Continental Army in 1775.
He signed the Constitution in 1787.
He was President of the United States from 1789 to 1797.
He died at Mount Vernon in 1799.
""",
    ("bio_web", "George_Washington"): """George Washington was born in 1732 in Virginia.
He was a delegate to the Continental Congress in 1774.
He became the first President of the United States in 1789.
He died in 1799.
""",
    ("wikipedia", "Benjamin_Franklin"): """Benjamin Franklin was born in 1706 in Boston.
He received the Copley Medal in 1753.
He was elected to the Royal Society in 1756.
He signed the Declaration of Independence in 1776 and the Treaty of Paris in 1783.
He signed the Constitution in 1787.
He died in 1790.
""",
    ("bio_web", "Benjamin_Franklin"): """Benjamin Franklin was born in 1706.
He settled in Philadelphia in 1723.
He founded the American Philosophical Society in 1743.
He died in 1790.
""",
    ("wikipedia", "John_Jay"): """John Jay was born in 1745.
He was a member of the Continental Congress from 1774.
He negotiated the Treaty of Paris in 1783.
He was the first Chief Justice of the United States from 1789 to 1795.
He died in 1829.
""",
    ("bio_web", "John_Jay"): """John Jay was born in 1745 in New York.
He became Chief Justice in 1789.
He died in 1829.
""",
    ("wikipedia", "Albert_Einstein"): """Albert Einstein was born in 1879 in Ulm.
He graduated from the Swiss Federal Polytechnic in 1900.
From 1902 he worked at the Swiss Patent Office in Bern.
He received the Nobel Prize in Physics in 1921.
He was elected to the Royal Society in 1921.
In 1933 he joined the Institute for Advanced Study in Princeton.
He died in 1955.
""",
    ("bio_web", "Albert_Einstein"): """Albert Einstein was born in 1879.
He enrolled at ETH Zurich in 1896.
He took a job at the patent office in 1902.
He was awarded the Copley Medal in 1925.
He emigrated to Princeton in 1933.
He died in 1955.
""",
    ("wikipedia", "Angelina_Jolie"): """Angelina Jolie was born in 1975 in Los Angeles.
She won an Academy Award in 2000.
She was appointed Special Envoy of the UN High Commissioner for Refugees in 2012.
""",
    ("bio_web", "Angelina_Jolie"): """Angelina Jolie was born in 1975.
She received an Oscar in 2000.
She became UNHCR Special Envoy in 2012.
""",
    ("wikipedia", "Lionel_Messi"): """Lionel Messi was born in 1987 in Rosario.
He made his debut for FC Barcelona in 2004.
He won the Ballon d'Or in 2009.
He joined Paris Saint-Germain in 2021.
He signed with Inter Miami in 2023.
""",
    ("bio_web", "Lionel_Messi"): """Lionel Messi was born in 1987.
He moved to Barcelona in 2000.
He won the Ballon d'Or in 2009.
""",
    ("wikipedia", "Ansel_Adams"): """Ansel Adams was born in 1902.
He received the Presidential Medal of Freedom in 1980.
He died in 1984.
""",
    ("bio_web", "Ansel_Adams"): """Ansel Adams was born in 1902 in San Francisco.
He was elected to the American Academy of Arts and Sciences in 1966.
He died in 1984.
""",
    ("wikipedia", "Charles_Francis_Adams"): """Charles Francis Adams was born in 1807.
He graduated from Harvard College in 1825.
He was United States Ambassador to the United Kingdom from 1861 to 1868.
He died in 1886.
""",
    ("bio_web", "Charles_Francis_Adams"): """Charles Francis Adams was born in 1807.
He served as ambassador to Great Britain from 1861.
""",
    ("wikipedia", "Nabby_Adams"): """Abigail Adams Smith was born in 1765.
She died in 1813.
""",
    ("bio_web", "Nabby_Adams"): """Nabby Adams was born in 1765 in Braintree.
She died in 1813.
""",
    ("wikipedia", "Charles_Adams"): """Charles Adams was born in 1770.
He studied at Harvard College from 1785.
He died in 1800.
""",
    ("bio_web", "Charles_Adams"): """Charles Adams was born in 1770.
""",
    ("wikipedia", "Thomas_Boylston_Adams"): """Thomas Boylston Adams was born in 1772.
He graduated from Harvard College in 1790.
He died in 1832.
""",
    ("bio_web", "Thomas_Boylston_Adams"): """Thomas Boylston Adams was born in 1772.
He died in 1832.
""",
    ("wikipedia", "Ida_Hermit"): """Ida Hermit lived quietly and left few records.
""",
    ("bio_web", "Ida_Hermit"): """Little is known about Ida Hermit.
""",
}

# Per-source mention probabilities for the synthetic biographies.
MENTION = {
    "wikipedia": {"born": 0.95, "died": 0.85, "spouse": 0.55, "child": 0.6, "positionHeld": 0.9,
                  "signatory": 0.85, "educatedAt": 0.6, "memberOf": 0.3, "award": 0.8, "residence": 0.05,
                  "employer": 0.35, "participant": 0.5},
    "bio_web": {"born": 0.95, "died": 0.9, "spouse": 0.9, "child": 0.8, "positionHeld": 0.45,
                "signatory": 0.3, "educatedAt": 0.75, "memberOf": 0.15, "award": 0.5, "residence": 0.45,
                "employer": 0.7, "participant": 0.15},
}

TEMPLATES = {
    "born": ["{name} was born in {y}.", "{Pron} was born in {place} in {y}."],
    "died": ["{Pron} died in {y}.", "{name} died at home in {y}."],
    "spouse": ["In {y}, {pron} married {obj}.", "{Pron} wed {obj} in {y}."],
    "child": ["{Poss} child {obj} was born in {y}.", "In {y} {poss} child {obj} was born."],
    "positionHeld": ["{Pron} served as {obj} from {y}.", "In {y}, {pron} became {obj}."],
    "signatory": ["{Pron} signed the {obj} in {y}.", "In {y}, {pron} was among the signers of the {obj}."],
    "educatedAt": ["{Pron} studied at {obj} and graduated in {y}.", "{Pron} attended {obj} from {y}."],
    "memberOf": ["In {y}, {pron} joined the {obj}.", "{Pron} was elected to the {obj} in {y}."],
    "award": ["{Pron} received the {obj} in {y}.", "In {y}, {pron} was honored with the {obj}."],
    "residence": ["{Pron} lived in {obj} around {y}.", "By {y} {pron} had settled in {obj}."],
    "employer": ["{Pron} worked for the {obj} starting in {y}.", "In {y}, {pron} took a post at the {obj}."],
    "participant": ["In {y}, {pron} took part in the {obj}.", "{Pron} was present at the {obj} in {y}."],
}


def first_label(eid):
    node = entities.get(eid) or events.get(eid)
    names = node["label"].split("|")
    return rng.choice(names)


def synthetic_bio(p, source):
    pron, poss = rng.choice([("he", "his"), ("she", "her")])
    lines = []
    for (s, prop, _, kind, obj, vs, ve) in facts:
        if s != p["id"]:
            continue
        prob = MENTION[source][prop]
        if kind == "entity":
            node = entities.get(obj) or events.get(obj)
            links = node.get("links", 50) if node in entities.values() else 50
            prob *= 0.55 + 0.45 * min(1.0, math.log1p(links) / math.log1p(3000))
        if rng.random() >= prob:
            continue
        if kind == "date":
            y = year_of(obj)
        elif vs:
            y = year_of(vs)
        else:
            node = entities.get(obj) or events.get(obj)
            lo = max(year_of(node["start"]) or p["by"], p["by"])
            hi = min(year_of(node["end"]) or life_end(p), life_end(p))
            if lo > hi:
                continue
            y = rng.randint(lo, hi)
        tmpl = rng.choice(TEMPLATES[prop])
        place = entities[rng.choice(HOMES)]["label"]
        obj_label = first_label(obj) if kind == "entity" else ""
        lines.append(tmpl.format(name=p["name"], pron=pron, Pron=pron.capitalize(), poss=poss,
                                 Poss=poss.capitalize(), y=y, obj=obj_label, place=place))
    filler = [
        f"{p['name']} was known for {rng.choice(p['tags']).replace('_', ' ')} work.",
        f"{pron.capitalize()} traveled widely and corresponded with many contemporaries.",
        f"Contemporaries described {p['name'].split()[0]} as tireless.",
    ]
    lines.insert(rng.randint(0, len(lines)), rng.choice(filler))
    if rng.random() < 0.5:
        lines.append(rng.choice(filler))
    return "\n".join(lines) + "\n"


def write(out):
    data = os.path.join(out, "mini_ekg")
    os.makedirs(data, exist_ok=True)

    def coord(loc):
        return ("", "") if loc is None else (f"{loc[0]:.4f}", f"{loc[1]:.4f}")

    with open(os.path.join(data, "entities.tsv"), "w") as f:
        f.write(ENT_HEADER + "\n")
        for e in sorted(entities.values(), key=lambda e: e["id"]):
            lat, lon = coord(e["loc"])
            f.write("\t".join([e["id"], e["label"], e["kind"], e["tags"], e["start"], e["end"], lat, lon,
                               str(e["links"]), e["desc"]]) + "\n")
    with open(os.path.join(data, "events.tsv"), "w") as f:
        f.write(EVT_HEADER + "\n")
        for e in sorted(events.values(), key=lambda e: e["id"]):
            lat, lon = coord(e["loc"])
            f.write("\t".join([e["id"], e["label"], e["start"], e["end"], lat, lon,
                               "|".join(e["participants"]), e["desc"]]) + "\n")
    with open(os.path.join(data, "facts.tsv"), "w") as f:
        f.write(FACT_HEADER + "\n")
        for row in facts:
            f.write("\t".join(row) + "\n")

    for source in ["wikipedia", "bio_web"]:
        d = os.path.join(out, "corpus", source)
        os.makedirs(d, exist_ok=True)
        for pid in sorted(e["id"] for e in entities.values() if e["kind"] == "person"):
            if pid == JA:
                text = JA_WIKI if source == "wikipedia" else JA_BIO
            elif (source, pid) in HAND:
                text = HAND[(source, pid)]
            else:
                p = next(q for q in synthetic if q["id"] == pid)
                text = synthetic_bio(p, source)
            with open(os.path.join(d, pid + ".txt"), "w") as f:
                f.write(text)

    persons = sum(1 for e in entities.values() if e["kind"] == "person")
    print(f"{persons} persons, {len(entities)} entities, {len(events)} events, {len(facts)} facts")


if __name__ == "__main__":
    write(sys.argv[1] if len(sys.argv) > 1 else "crates/biotimeline/fixtures")
