"""Pine Bark 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.602,
    "detail": 2,
    "roughness": 0.729,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
