"""Polished Marble 11 Material generator (Materials)."""

PARAMS = {
    "size": 0.45,
    "detail": 1,
    "roughness": 0.397,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 11 Material"
    for key, value in params.items():
        node[key] = value
    return node
