"""Worn Leather 02 Material generator (Materials)."""

PARAMS = {
    "size": 1.725,
    "detail": 3,
    "roughness": 0.432,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
