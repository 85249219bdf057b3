"""Ivy Vine generator (Plants)."""

PARAMS = {
    "size": 0.348,
    "detail": 4,
    "roughness": 0.922,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Ivy Vine"
    for key, value in params.items():
        node[key] = value
    return node
