"""Polished Marble 04 Material generator (Materials)."""

PARAMS = {
    "size": 0.914,
    "detail": 4,
    "roughness": 0.996,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
