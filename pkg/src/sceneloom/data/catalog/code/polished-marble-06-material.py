"""Polished Marble 06 Material generator (Materials)."""

PARAMS = {
    "size": 3.799,
    "detail": 2,
    "roughness": 0.841,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
