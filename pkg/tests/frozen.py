"""Frozen regression constants written by scripts/compute_frozen.py; do not edit."""

# fmt: off
DISCRETE_FAMILY = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12),
 (12, 13)]
GAMMABAR_M = [2, 4, 8, 16]
MZ_SWEEP = [(1, (1,), None), (1, (2,), None), (1, (3,), None), (1, (4,), None), (1, (5,), None),
 (1, (6,), None), (1, (7,), None), (1, (8,), None), (1, (9,), None), (1, (10,), None),
 (1, (11,), None), (1, (12,), None), (2, (1,), None), (2, (2,), None), (2, (3,), None),
 (2, (4,), None), (2, (5,), None), (2, (6,), None), (2, (7,), None), (2, (8,), None),
 (2, (9,), None), (2, (10,), None), (2, (11,), None), (2, (12,), None), (1, (1, 2), (0, 0)),
 (1, (1, 2), (0, 1)), (1, (2, 3), (0, 0)), (1, (2, 3), (0, 1)), (1, (3, 4), (0, 0)),
 (1, (3, 4), (0, 1)), (1, (4, 5), (0, 0)), (1, (4, 5), (0, 1)), (1, (5, 6), (0, 0)),
 (1, (5, 6), (0, 1)), (1, (6, 7), (0, 0)), (1, (6, 7), (0, 1)), (1, (7, 8), (0, 0)),
 (1, (7, 8), (0, 1)), (1, (8, 9), (0, 0)), (1, (8, 9), (0, 1)), (2, (1, 2), (0, 0)),
 (2, (1, 2), (0, 1)), (2, (2, 3), (0, 0)), (2, (2, 3), (0, 1)), (2, (3, 4), (0, 0)),
 (2, (3, 4), (0, 1)), (2, (4, 5), (0, 0)), (2, (4, 5), (0, 1)), (2, (5, 6), (0, 0)),
 (2, (5, 6), (0, 1)), (2, (6, 7), (0, 0)), (2, (6, 7), (0, 1)), (2, (7, 8), (0, 0)),
 (2, (7, 8), (0, 1)), (2, (8, 9), (0, 0)), (2, (8, 9), (0, 1)), (1, (1, 2, 3), None),
 (1, (2, 3, 5), None), (2, (1, 2, 3), None), (2, (2, 3, 5), None)]
H_NU = [1, 2, 3]
H_M = [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28,
 29, 30, 31, 32]
H_CUTOFF_FACTOR = 16
DISCRETE_N12 = 2.3336997665645454
DISCRETE_RATIOS = [3.064608975226487, 2.4806081357636014, 2.165372451105636, 1.99100289694757, 1.8475987893429084,
 1.7609218301499143, 1.6844932290854089, 1.6308223066527532, 1.5872634296100347, 1.5517844016374436,
 1.5172821616177457, 1.4889280941287633]
DISCRETE_SPREAD = 2.0582652629841895
GAMMABAR_RATIOS = {(2, 2): 1.6613494084445943,
 (2, 4): 1.3063265963103174,
 (2, 8): 1.0972049110393236,
 (2, 16): 0.9660329012319809,
 (4, 2): 1.3063265963103168,
 (4, 4): 1.0235499037021536,
 (4, 8): 0.87667577631923,
 (4, 16): 0.7835094835974479,
 (8, 2): 1.0972049110393223,
 (8, 4): 0.8766757763192297,
 (8, 8): 0.7327863681710649,
 (8, 16): 0.6648435474483,
 (16, 2): 0.9660329012319795,
 (16, 4): 0.7835094835974484,
 (16, 8): 0.6648435474482992,
 (16, 16): 0.5812117871471775}
GAMMABAR_SPREAD = 2.858423461435924
GAMMABAR_DIAG_SPREAD = 2.858423461435924
MZ_VALUES = {(1, (1,), None): 1.9999961168970364,
 (1, (1, 2), (0, 0)): 1.9894302787077187,
 (1, (1, 2), (0, 1)): 1.9894302787077183,
 (1, (1, 2, 3), None): 1.524951597412507,
 (1, (2,), None): 1.9894302787077187,
 (1, (2, 3), (0, 0)): 1.524951597412507,
 (1, (2, 3), (0, 1)): 1.5249515974125065,
 (1, (2, 3, 5), None): 1.2814792515889404,
 (1, (3,), None): 1.8714515067533941,
 (1, (3, 4), (0, 0)): 1.3938037196804043,
 (1, (3, 4), (0, 1)): 1.393803719680405,
 (1, (4,), None): 1.5892323388473613,
 (1, (4, 5), (0, 0)): 1.27007310401506,
 (1, (4, 5), (0, 1)): 1.2700731040150597,
 (1, (5,), None): 1.8335052594216121,
 (1, (5, 6), (0, 0)): 1.1952491315586662,
 (1, (5, 6), (0, 1)): 1.1952491315586666,
 (1, (6,), None): 1.4429112210000654,
 (1, (6, 7), (0, 0)): 1.1433928699178406,
 (1, (6, 7), (0, 1)): 1.1433928699178408,
 (1, (7,), None): 1.3668140175693815,
 (1, (7, 8), (0, 0)): 1.1028983846890654,
 (1, (7, 8), (0, 1)): 1.1028983846890654,
 (1, (8,), None): 1.3768943604905288,
 (1, (8, 9), (0, 0)): 1.1282222089513445,
 (1, (8, 9), (0, 1)): 1.1282222089513443,
 (1, (9,), None): 1.3093179229017564,
 (1, (10,), None): 1.265411445077578,
 (1, (11,), None): 1.2908540144942011,
 (1, (12,), None): 1.2923111544988972,
 (2, (1,), None): 1.9894302787077187,
 (2, (1, 2), (0, 0)): 1.5499371436964477,
 (2, (1, 2), (0, 1)): 1.44143658915824,
 (2, (1, 2, 3), None): 1.422661384543324,
 (2, (2,), None): 1.5892323388473613,
 (2, (2, 3), (0, 0)): 1.2726766246841565,
 (2, (2, 3), (0, 1)): 1.2319094338464696,
 (2, (2, 3, 5), None): 1.1846342661062532,
 (2, (3,), None): 1.4429112210000654,
 (2, (3, 4), (0, 0)): 1.161032069223562,
 (2, (3, 4), (0, 1)): 1.1375409986451956,
 (2, (4,), None): 1.3768943604905288,
 (2, (4, 5), (0, 0)): 1.121967441540073,
 (2, (4, 5), (0, 1)): 1.1042055781491296,
 (2, (5,), None): 1.265411445077578,
 (2, (5, 6), (0, 0)): 1.0829523911393597,
 (2, (5, 6), (0, 1)): 1.0675185515741965,
 (2, (6,), None): 1.2923111544988972,
 (2, (6, 7), (0, 0)): 1.0654137878875185,
 (2, (6, 7), (0, 1)): 1.0482611193079225,
 (2, (7,), None): 1.2540425757819098,
 (2, (7, 8), (0, 0)): 1.0563119781299652,
 (2, (7, 8), (0, 1)): 1.035586658640817,
 (2, (8,), None): 1.190708480593894,
 (2, (8, 9), (0, 0)): 1.0443940463135557,
 (2, (8, 9), (0, 1)): 1.0311957419209374,
 (2, (9,), None): 1.1657703331286602,
 (2, (10,), None): 1.129502752143382,
 (2, (11,), None): 1.1483228540024153,
 (2, (12,), None): 1.122606621096951}
MZ_CONSTANT = 1.9999961168970364
H_RATIOS = {(1, 2): 0.4580026288313146,
 (1, 3): 0.5200271935263961,
 (1, 4): 0.5319028514525097,
 (1, 5): 0.5318727638411611,
 (1, 6): 0.5283788195304572,
 (1, 7): 0.5239124512271325,
 (1, 8): 0.5193233986017148,
 (1, 9): 0.5149159474589082,
 (1, 10): 0.5107916617488811,
 (1, 11): 0.5069720955154075,
 (1, 12): 0.5034469369457574,
 (1, 13): 0.5001940420380204,
 (1, 14): 0.4971880200783441,
 (1, 15): 0.49440389358416276,
 (1, 16): 0.4918185627255164,
 (1, 17): 0.4894112761679626,
 (1, 18): 0.48716365722015226,
 (1, 19): 0.4850595417545405,
 (1, 20): 0.48308474864853745,
 (1, 21): 0.4812268388439921,
 (1, 22): 0.47947488784465736,
 (1, 23): 0.4778192812892474,
 (1, 24): 0.47625153597025016,
 (1, 25): 0.4747641453355561,
 (1, 26): 0.4733504471339175,
 (1, 27): 0.47200451044943087,
 (1, 28): 0.47072103940819315,
 (1, 29): 0.4694952910748739,
 (1, 30): 0.4683230053594029,
 (1, 31): 0.46720034506187347,
 (1, 32): 0.4661238444689054,
 (2, 2): 0.15923438849028454,
 (2, 3): 0.23366065867235714,
 (2, 4): 0.2702265490028138,
 (2, 5): 0.2911655587000619,
 (2, 6): 0.3044570362194093,
 (2, 7): 0.31351296856104127,
 (2, 8): 0.3200066281297831,
 (2, 9): 0.32484556800398495,
 (2, 10): 0.32856092707302587,
 (2, 11): 0.33148251178876803,
 (2, 12): 0.33382503835952876,
 (2, 13): 0.3357338063177384,
 (2, 14): 0.3373103555343874,
 (2, 15): 0.3386276005299969,
 (2, 16): 0.3397391326887694,
 (2, 17): 0.340685142184918,
 (2, 18): 0.34149630407696513,
 (2, 19): 0.34219639683120284,
 (2, 20): 0.3428041083074247,
 (2, 21): 0.34333430733668213,
 (2, 22): 0.34379895569478225,
 (2, 23): 0.34420777309759787,
 (2, 24): 0.34456872941786104,
 (2, 25): 0.34488841399971126,
 (2, 26): 0.34517231621397204,
 (2, 27): 0.3454250410181927,
 (2, 28): 0.3456504763147499,
 (2, 29): 0.34585192414105076,
 (2, 30): 0.3460322044269692,
 (2, 31): 0.34619373773592854,
 (2, 32): 0.34633861175505404,
 (3, 2): 0.06776577725173821,
 (3, 3): 0.13066166164023754,
 (3, 4): 0.16894059011011794,
 (3, 5): 0.1937927131573262,
 (3, 6): 0.21107332539511556,
 (3, 7): 0.22374706924025303,
 (3, 8): 0.23342921031992803,
 (3, 9): 0.24106492549094943,
 (3, 10): 0.24724127636111634,
 (3, 11): 0.2523411695358637,
 (3, 12): 0.25662463267705155,
 (3, 13): 0.2602742914508446,
 (3, 14): 0.263422107776966,
 (3, 15): 0.26616577906158567,
 (3, 16): 0.26857916793441017,
 (3, 17): 0.2707191471890419,
 (3, 18): 0.27263021699674,
 (3, 19): 0.274347695506211,
 (3, 20): 0.27589997128088417,
 (3, 21): 0.27731012405160765,
 (3, 22): 0.27859711106593565,
 (3, 23): 0.27977664897303783,
 (3, 24): 0.28086187861851925,
 (3, 25): 0.281863872614572,
 (3, 26): 0.28279202740938697,
 (3, 27): 0.283654369393423,
 (3, 28): 0.2844577962546914,
 (3, 29): 0.2852082690186509,
 (3, 30): 0.28591096614246114,
 (3, 31): 0.28657040813355983,
 (3, 32): 0.28719055906879354}
H_CONSTANT = 0.5319028514525097
