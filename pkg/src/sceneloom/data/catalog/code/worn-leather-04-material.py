"""Worn Leather 04 Material generator (Materials)."""

PARAMS = {
    "size": 0.94,
    "detail": 3,
    "roughness": 0.907,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
