"""Moss Patch generator (Plants)."""

PARAMS = {
    "size": 0.336,
    "detail": 1,
    "roughness": 0.286,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Moss Patch"
    for key, value in params.items():
        node[key] = value
    return node
